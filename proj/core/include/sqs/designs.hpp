#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqs/perm.hpp"

namespace sqs {

using Block = std::vector<Point>;

/// Incidence structure on points [0, v) with k-element blocks, stored in
/// canonical form: each block sorted, blocks sorted lexicographically.
class Design {
 public:
  Design() = default;
  /// Sorts the blocks into canonical form. Throws std::invalid_argument on
  /// wrong block sizes, repeated or out-of-range points, or duplicate blocks.
  Design(std::size_t v, std::size_t k, std::vector<Block> blocks);

  std::size_t v() const { return v_; }
  std::size_t k() const { return k_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  /// Index of a sorted block, if present.
  std::optional<std::size_t> index_of(std::span<const Point> sorted_block) const;
  /// Indices of the blocks through x, ascending.
  std::vector<std::size_t> blocks_through(Point x) const;

  friend bool operator==(const Design& a, const Design& b) {
    return a.v_ == b.v_ && a.k_ == b.k_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t v_ = 0;
  std::size_t k_ = 0;
  std::vector<Block> blocks_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;  // colex rank -> block index
};

/// Describes why blocks are not in canonical form, or nullopt if they are.
std::optional<std::string> canonical_form_error(std::size_t v, std::size_t k, const std::vector<Block>& blocks);

struct Flag {
  Point point = 0;
  std::size_t block = 0;
  friend bool operator==(const Flag&, const Flag&) = default;
};

std::vector<Flag> flags(const Design& d);

/// Result of a Steiner-system check: on failure, the lexicographically first
/// t-subset covered zero times or more than once.
struct SteinerVerdict {
  bool ok = false;
  std::vector<Point> witness;
  std::size_t witness_cover_count = 0;
  explicit operator bool() const { return ok; }
};

/// Every t-subset lies in exactly one block. Throws std::length_error when
/// C(v, t) exceeds 5*10^7.
SteinerVerdict verify_steiner(const Design& d, std::size_t t);
/// SQS check: k = 4, v >= 4, every triple in exactly one block.
/// Throws std::invalid_argument when k != 4 or v < 4.
SteinerVerdict verify_sqs(const Design& d);
/// 2-(v,3,1) check.
SteinerVerdict verify_sts(const Design& d);

/// r = (v-1)(v-2)/6 and b = v r / 4 for an SQS(v). Throws std::domain_error
/// when the result is not integral.
std::uint64_t replication_number(std::uint64_t v);
std::uint64_t block_count(std::uint64_t v);

/// Blocks through x with x removed; points above x shift down by one.
/// Throws std::out_of_range for x >= v.
Design derived_design(const Design& d, Point x);

/// Throws std::invalid_argument on degree mismatch.
bool preserves_design(const PermGroup& g, const Design& d);
/// The permutation g induces on block indices; nullopt if g is not an
/// automorphism.
std::optional<Permutation> block_permutation(const Permutation& g, const Design& d);

/// Size of the orbit of flag (block(0)[0], 0) under G. Throws
/// std::invalid_argument if G does not preserve the design.
std::uint64_t flag_orbit_size(const Design& d, const PermGroup& g);
std::uint64_t block_orbit_size(const Design& d, const PermGroup& g);
bool is_flag_transitive(const Design& d, const PermGroup& g);
bool is_block_transitive(const Design& d, const PermGroup& g);

/// Steiner systems with k in {3, 4} only (triple systems need v <= 40, quadruple
/// systems v <= 32). Returns a point bijection mapping the blocks of d1 onto
/// the blocks of d2, or nullopt. Throws std::invalid_argument for other k or
/// non-Steiner input, std::length_error past the size guards.
std::optional<Permutation> are_isomorphic(const Design& d1, const Design& d2);

/// The first design of each isomorphism class, in input order.
std::vector<Design> isomorphism_class_representatives(const std::vector<Design>& designs);

/// Per-point invariants used to prune the isomorphism search.
std::vector<std::uint64_t> point_invariants(const Design& d);

}  // namespace sqs
