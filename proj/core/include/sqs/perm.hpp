#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sqs {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image list.
///
/// Products compose left to right: (g * h)[x] == h[g[x]], i.e. x^(gh) = (x^g)^h.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection on [0, n).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Cycles may omit fixed points; points must be < degree.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t fixed_point_count() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const;
  std::uint64_t order() const;

  std::string to_image_string() const;
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

std::size_t fixed_point_count(const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

/// Deterministic Schreier-Sims stabilizer chain. Base points are taken in the
/// order supplied as prefix, then as the smallest point moved by each new
/// strong generator.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree, std::vector<Point> base_prefix = {});

  /// Adds g to the group; returns true when the group grew.
  bool extend(const Permutation& g);
  bool contains(const Permutation& g) const;

  /// Throws std::overflow_error past 2^63.
  std::uint64_t order() const;
  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  std::vector<Point> base() const;
  /// Orbit of the i-th base point under the i-th stabilizer in the chain.
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }
  std::vector<Permutation> strong_generators() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<std::int32_t> slot;  // point -> index into orbit/transversal, -1 if absent
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;  // transversal[i] maps base to orbit[i]
  };

  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void add_generator(std::size_t level, const Permutation& g);
  void rebuild_orbit(Level& level) const;
  Level make_level(Point base) const;

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

struct SubsetOrbit {
  std::vector<Point> representative;  // lexicographically least member, sorted
  std::uint64_t length = 0;
};

/// Partition of all k-subsets of the points into orbits, with a lookup from
/// a subset's colex rank to its orbit.
struct SubsetOrbitPartition {
  std::size_t degree = 0;
  std::size_t k = 0;
  std::vector<SubsetOrbit> orbits;  // sorted by representative
  std::vector<std::uint32_t> orbit_of_rank;

  std::size_t orbit_index(std::span<const Point> sorted_subset) const;
};

/// Colex rank of a sorted subset: sum of C(s_i, i+1).
std::uint64_t subset_rank(std::span<const Point> sorted_subset);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct SetwiseStabilizer {
  std::uint64_t orbit_length = 0;
  std::uint64_t order = 0;  // |G| / orbit_length
  std::vector<Permutation> generators;  // Schreier generators, reduced
};

/// Permutation group given by generators; stabilizer chain built on first use.
class PermGroup {
 public:
  static constexpr std::size_t kMaxDegree = 10000;

  /// All generators must have the given degree. Throws std::invalid_argument
  /// on mismatch, std::length_error past kMaxDegree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  explicit PermGroup(std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  const StabilizerChain& chain() const;

  /// Sorted orbit of x. Throws std::out_of_range for x >= degree.
  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;

  /// Sorted orbit of a point set under the induced action; members sorted.
  std::vector<std::vector<Point>> orbit_of_subset(std::span<const Point> subset) const;

  /// Throws std::length_error when C(n, k) exceeds 10^7.
  SubsetOrbitPartition orbits_on_ksubsets(std::size_t k) const;

  /// Generators of G_x from Schreier generators.
  PermGroup point_stabilizer(Point x) const;
  SetwiseStabilizer setwise_stabilizer(std::span<const Point> subset) const;
  std::uint64_t setwise_stabilizer_order(std::span<const Point> subset) const;

  /// Transitive on ordered t-tuples of distinct points. Throws
  /// std::invalid_argument for t > 4.
  bool is_t_transitive(std::size_t t) const;
  /// One orbit on t-subsets.
  bool is_t_homogeneous(std::size_t t) const;

 private:
  struct ChainCache;
  void validate() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

// Free-function spellings of the group queries.
inline std::uint64_t group_order(const PermGroup& g) { return g.order(); }
inline std::vector<Point> orbit_of_point(const PermGroup& g, Point x) { return g.orbit(x); }
std::vector<SubsetOrbit> orbits_on_ksubsets(const PermGroup& g, std::size_t k);
inline std::uint64_t setwise_stabilizer_order(const PermGroup& g, std::span<const Point> s) {
  return g.setwise_stabilizer_order(s);
}
inline bool is_t_transitive(const PermGroup& g, std::size_t t) { return g.is_t_transitive(t); }
inline bool is_t_homogeneous(const PermGroup& g, std::size_t t) { return g.is_t_homogeneous(t); }

}  // namespace sqs
