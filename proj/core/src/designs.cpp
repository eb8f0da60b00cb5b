#include "sqs/designs.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqs {

namespace {

constexpr std::uint64_t kMaxVerifySubsets = 50'000'000;

bool next_combination(std::vector<Point>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void check_block(std::size_t v, std::size_t k, const Block& b, std::size_t index) {
  auto where = [&] { return "block " + std::to_string(index); };
  if (b.size() != k) {
    throw std::invalid_argument(where() + ": expected " + std::to_string(k) + " points, got " + std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= v) throw std::invalid_argument(where() + ": point " + std::to_string(b[i]) + " out of range");
    if (i > 0 && b[i] == b[i - 1]) throw std::invalid_argument(where() + ": repeated point " + std::to_string(b[i]));
  }
}

}  // namespace

Design::Design(std::size_t v, std::size_t k, std::vector<Block> blocks) : v_(v), k_(k), blocks_(std::move(blocks)) {
  if (k == 0 || k > v) throw std::invalid_argument("Design: need 1 <= k <= v");
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i) check_block(v, k, blocks_[i], i);
  std::sort(blocks_.begin(), blocks_.end());
  index_.reserve(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0 && blocks_[i] == blocks_[i - 1]) throw std::invalid_argument("Design: duplicate block");
    index_.emplace(subset_rank(blocks_[i]), static_cast<std::uint32_t>(i));
  }
}

std::optional<std::size_t> Design::index_of(std::span<const Point> sorted_block) const {
  if (sorted_block.size() != k_) return std::nullopt;
  auto it = index_.find(subset_rank(sorted_block));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Design::blocks_through(Point x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) out.push_back(i);
  }
  return out;
}

std::optional<std::string> canonical_form_error(std::size_t v, std::size_t k, const std::vector<Block>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    auto where = "block " + std::to_string(i);
    if (b.size() != k) return where + ": expected " + std::to_string(k) + " points";
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] >= v) return where + ": point " + std::to_string(b[j]) + " out of range";
      if (j > 0 && b[j] <= b[j - 1]) return where + ": points not strictly increasing (sort each block)";
    }
    if (i > 0) {
      if (b == blocks[i - 1]) return where + ": duplicate block";
      if (b < blocks[i - 1]) return where + ": blocks not in lexicographic order (sort the block list)";
    }
  }
  return std::nullopt;
}

std::vector<Flag> flags(const Design& d) {
  std::vector<Flag> out;
  out.reserve(d.block_count() * d.k());
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    for (Point p : d.block(i)) out.push_back({p, i});
  }
  return out;
}

SteinerVerdict verify_steiner(const Design& d, std::size_t t) {
  if (t == 0 || t > d.k()) throw std::invalid_argument("verify_steiner: need 1 <= t <= k");
  const std::uint64_t subsets = binomial(d.v(), t);
  if (subsets > kMaxVerifySubsets) throw std::length_error("verify_steiner: too many t-subsets");
  std::vector<std::uint8_t> count(subsets, 0);
  std::vector<Point> sub(t);
  for (const auto& b : d.blocks()) {
    std::vector<Point> pos(t);
    for (std::size_t i = 0; i < t; ++i) pos[i] = static_cast<Point>(i);
    do {
      for (std::size_t i = 0; i < t; ++i) sub[i] = b[pos[i]];
      auto& c = count[subset_rank(sub)];
      if (c < 255) ++c;
    } while (next_combination(pos, d.k()));
  }
  std::vector<Point> s(t);
  for (std::size_t i = 0; i < t; ++i) s[i] = static_cast<Point>(i);
  do {
    auto c = count[subset_rank(s)];
    if (c != 1) return SteinerVerdict{false, s, c};
  } while (next_combination(s, d.v()));
  return SteinerVerdict{true, {}, 0};
}

SteinerVerdict verify_sqs(const Design& d) {
  if (d.k() != 4 || d.v() < 4) throw std::invalid_argument("verify_sqs: need k = 4 and v >= 4");
  return verify_steiner(d, 3);
}

SteinerVerdict verify_sts(const Design& d) {
  if (d.k() != 3) throw std::invalid_argument("verify_sts: need k = 3");
  return verify_steiner(d, 2);
}

std::uint64_t replication_number(std::uint64_t v) {
  if (v < 4) throw std::domain_error("replication_number: v must be >= 4");
  std::uint64_t num = (v - 1) * (v - 2);
  if (num % 6 != 0) throw std::domain_error("replication_number: (v-1)(v-2)/6 not integral for v=" + std::to_string(v));
  return num / 6;
}

std::uint64_t block_count(std::uint64_t v) {
  auto r = replication_number(v);
  if ((v * r) % 4 != 0) throw std::domain_error("block_count: v r / 4 not integral for v=" + std::to_string(v));
  return v * r / 4;
}

Design derived_design(const Design& d, Point x) {
  if (x >= d.v()) throw std::out_of_range("derived_design: point out of range");
  std::vector<Block> blocks;
  for (const auto& b : d.blocks()) {
    if (!std::binary_search(b.begin(), b.end(), x)) continue;
    Block nb;
    nb.reserve(b.size() - 1);
    for (Point p : b) {
      if (p != x) nb.push_back(p > x ? p - 1 : p);
    }
    blocks.push_back(std::move(nb));
  }
  return Design(d.v() - 1, d.k() - 1, std::move(blocks));
}

std::optional<Permutation> block_permutation(const Permutation& g, const Design& d) {
  if (g.degree() != d.v()) throw std::invalid_argument("block_permutation: degree mismatch");
  std::vector<Point> images(d.block_count());
  Block img(d.k());
  for (std::size_t i = 0; i < d.block_count(); ++i) {
    const auto& b = d.block(i);
    for (std::size_t j = 0; j < b.size(); ++j) img[j] = g[b[j]];
    std::sort(img.begin(), img.end());
    auto idx = d.index_of(img);
    if (!idx) return std::nullopt;
    images[i] = static_cast<Point>(*idx);
  }
  return Permutation(std::move(images));
}

bool preserves_design(const PermGroup& g, const Design& d) {
  if (g.degree() != d.v()) throw std::invalid_argument("preserves_design: group degree differs from v");
  for (const auto& s : g.generators()) {
    if (!block_permutation(s, d)) return false;
  }
  return true;
}

namespace {

std::vector<Permutation> induced_block_generators(const Design& d, const PermGroup& g, const char* who) {
  if (g.degree() != d.v()) throw std::invalid_argument(std::string(who) + ": group degree differs from v");
  std::vector<Permutation> out;
  for (const auto& s : g.generators()) {
    auto bp = block_permutation(s, d);
    if (!bp) throw std::invalid_argument(std::string(who) + ": group does not preserve the design");
    out.push_back(std::move(*bp));
  }
  return out;
}

}  // namespace

std::uint64_t block_orbit_size(const Design& d, const PermGroup& g) {
  auto gens = induced_block_generators(d, g, "block_orbit_size");
  if (d.block_count() == 0) return 0;
  std::vector<bool> seen(d.block_count(), false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      Point b = s[queue[i]];
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  return queue.size();
}

std::uint64_t flag_orbit_size(const Design& d, const PermGroup& g) {
  auto block_gens = induced_block_generators(d, g, "flag_orbit_size");
  if (d.block_count() == 0) return 0;
  const std::size_t k = d.k();
  // Flag id = block * k + position of the point inside the block.
  auto position = [&](std::size_t block, Point p) {
    const auto& b = d.block(block);
    return static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), p) - b.begin());
  };
  std::vector<bool> seen(d.block_count() * k, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t block = queue[i] / k;
    const Point p = d.block(block)[queue[i] % k];
    for (std::size_t s = 0; s < block_gens.size(); ++s) {
      const std::size_t nb = block_gens[s][static_cast<Point>(block)];
      const std::size_t id = nb * k + position(nb, g.generators()[s][p]);
      if (!seen[id]) {
        seen[id] = true;
        queue.push_back(id);
      }
    }
  }
  return queue.size();
}

bool is_flag_transitive(const Design& d, const PermGroup& g) {
  return d.block_count() > 0 && flag_orbit_size(d, g) == d.block_count() * d.k();
}

bool is_block_transitive(const Design& d, const PermGroup& g) {
  return d.block_count() > 0 && block_orbit_size(d, g) == d.block_count();
}

}  // namespace sqs
