#include "sqs/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sqs {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) throw std::invalid_argument("Permutation: image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation g;
  g.images_.resize(degree);
  std::iota(g.images_.begin(), g.images_.end(), Point{0});
  return g;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) throw std::invalid_argument("Permutation::from_cycles: point out of range");
      if (used[x]) throw std::invalid_argument("Permutation::from_cycles: point repeated across cycles");
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("Permutation: degree mismatch in product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_image_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t fixed_point_count(const Permutation& g) { return g.fixed_point_count(); }

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::size_t h = g.degree();
  for (Point x : g.images()) h = h * 1000003u ^ x;
  return h;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree, std::vector<Point> base_prefix) : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw std::out_of_range("StabilizerChain: base point out of range");
    levels_.push_back(make_level(b));
  }
}

StabilizerChain::Level StabilizerChain::make_level(Point base) const {
  Level level;
  level.base = base;
  level.slot.assign(degree_, -1);
  level.slot[base] = 0;
  level.orbit = {base};
  level.transversal = {Permutation::identity(degree_)};
  return level;
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  // Existing transversal entries stay valid; only new points are appended.
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point u = level.orbit[i];
    for (const auto& s : level.generators) {
      Point img = s[u];
      if (level.slot[img] >= 0) continue;
      level.slot[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      level.transversal.push_back(level.transversal[i] * s);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t s = level.slot[g[level.base]];
    if (s < 0) return {std::move(g), l};
    if (s > 0) g = g * level.transversal[s].inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::add_generator(std::size_t j, const Permutation& g) {
  if (j == levels_.size()) levels_.push_back(make_level(g.first_moved_point()));
  levels_[j].generators.push_back(g);
  rebuild_orbit(levels_[j]);

  // Every Schreier generator must sift through the levels below j. Deeper
  // levels may grow (and levels_ may reallocate) inside the loop, level j
  // itself does not.
  const std::size_t orbit_size = levels_[j].orbit.size();
  const std::size_t gen_count = levels_[j].generators.size();
  for (std::size_t i = 0; i < orbit_size; ++i) {
    for (std::size_t k = 0; k < gen_count; ++k) {
      const Level& level = levels_[j];
      const Permutation& s = level.generators[k];
      Point img = s[level.orbit[i]];
      Permutation schreier = level.transversal[i] * s * level.transversal[level.slot[img]].inverse();
      if (schreier.is_identity()) continue;
      auto [residue, stop] = sift(std::move(schreier), j + 1);
      if (!residue.is_identity()) add_generator(j + 1, residue);
    }
  }
}

bool StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("StabilizerChain::extend: degree mismatch");
  if (contains(g)) return false;
  add_generator(0, g);
  return true;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0).first.is_identity();
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const auto& level : levels_) {
    std::uint64_t n = level.orbit.size();
    if (order > (std::uint64_t{1} << 63) / n) throw std::overflow_error("StabilizerChain::order: exceeds 2^63");
    order *= n;
  }
  return order;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& level : levels_) b.push_back(level.base);
  return b;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_) {
    for (const auto& g : level.generators) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subset ranking

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial: exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t subset_rank(std::span<const Point> s) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += binomial(s[i], i + 1);
  return r;
}

namespace {

class SubsetRanker {
 public:
  SubsetRanker(std::size_t n, std::size_t k) : k_(k), table_((k + 1) * (n + 1), 0) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= k; ++j) table_[j * (n + 1) + i] = binomial(i, j);
    }
    stride_ = n + 1;
  }
  std::uint64_t rank(std::span<const Point> s) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < k_; ++i) r += table_[(i + 1) * stride_ + s[i]];
    return r;
  }

 private:
  std::size_t k_;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> table_;
};

void image_sorted(const Permutation& g, std::span<const Point> in, std::span<Point> out) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    Point y = g[in[i]];
    std::size_t j = i;
    while (j > 0 && out[j - 1] > y) {
      out[j] = out[j - 1];
      --j;
    }
    out[j] = y;
  }
}

std::vector<Point> sorted_checked(std::span<const Point> subset, std::size_t degree) {
  std::vector<Point> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("subset has repeated points");
  if (!s.empty() && s.back() >= degree) throw std::out_of_range("subset point out of range");
  return s;
}

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

constexpr std::uint64_t kMaxSubsetCount = 10'000'000;

}  // namespace

std::size_t SubsetOrbitPartition::orbit_index(std::span<const Point> sorted_subset) const {
  if (sorted_subset.size() != k) throw std::invalid_argument("orbit_index: subset size mismatch");
  return orbit_of_rank.at(subset_rank(sorted_subset));
}

// ---------------------------------------------------------------------------
// PermGroup

struct PermGroup::ChainCache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  validate();
}

PermGroup::PermGroup(std::vector<Permutation> generators)
    : degree_(generators.empty() ? 0 : generators.front().degree()),
      generators_(std::move(generators)),
      cache_(std::make_shared<ChainCache>()) {
  validate();
}

void PermGroup::validate() const {
  if (degree_ > kMaxDegree) throw std::length_error("PermGroup: degree exceeds 10^4");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    auto chain = std::make_unique<StabilizerChain>(degree_);
    for (const auto& g : generators_) chain->extend(g);
    cache_->chain = std::move(chain);
  });
  return *cache_->chain;
}

std::uint64_t PermGroup::order() const { return chain().order(); }
bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_) throw std::out_of_range("PermGroup::orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orbit{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      Point y = g[orbit[i]];
      if (!seen[y]) {
        seen[y] = true;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbit_of_subset(std::span<const Point> subset) const {
  auto start = sorted_checked(subset, degree_);
  const std::size_t k = start.size();
  if (binomial(degree_, k) > (std::uint64_t{1} << 62)) throw std::length_error("orbit_of_subset: too many subsets to rank");
  SubsetRanker ranker(degree_, k);
  std::unordered_set<std::uint64_t> seen{ranker.rank(start)};
  std::vector<std::vector<Point>> orbit{start};
  std::vector<Point> img(k);
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      image_sorted(g, orbit[i], img);
      if (seen.insert(ranker.rank(img)).second) orbit.push_back(img);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

SubsetOrbitPartition PermGroup::orbits_on_ksubsets(std::size_t k) const {
  const std::uint64_t total = binomial(degree_, k);
  if (total > kMaxSubsetCount) throw std::length_error("orbits_on_ksubsets: C(n,k) exceeds 10^7");
  constexpr std::uint32_t kUnset = UINT32_MAX;
  SubsetOrbitPartition part;
  part.degree = degree_;
  part.k = k;
  part.orbit_of_rank.assign(total, kUnset);
  if (total == 0) return part;

  SubsetRanker ranker(degree_, k);
  std::vector<Point> c(k);
  std::iota(c.begin(), c.end(), Point{0});
  std::vector<Point> queue;  // flattened k-subsets
  std::vector<Point> img(k);
  do {
    const std::uint64_t r = ranker.rank(c);
    if (part.orbit_of_rank[r] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.orbits.size());
    part.orbit_of_rank[r] = id;
    queue.assign(c.begin(), c.end());
    std::uint64_t length = 1;
    for (std::size_t head = 0; head < queue.size(); head += k) {
      for (const auto& g : generators_) {
        image_sorted(g, std::span<const Point>(queue.data() + head, k), img);
        const std::uint64_t ri = ranker.rank(img);
        if (part.orbit_of_rank[ri] != kUnset) continue;
        part.orbit_of_rank[ri] = id;
        queue.insert(queue.end(), img.begin(), img.end());
        ++length;
      }
    }
    part.orbits.push_back({c, length});
  } while (next_combination(c, degree_));
  return part;
}

std::vector<SubsetOrbit> orbits_on_ksubsets(const PermGroup& g, std::size_t k) {
  return g.orbits_on_ksubsets(k).orbits;
}

PermGroup PermGroup::point_stabilizer(Point x) const {
  if (x >= degree_) throw std::out_of_range("point_stabilizer: point out of range");
  std::vector<std::int32_t> slot(degree_, -1);
  std::vector<Point> orbit{x};
  std::vector<Permutation> transversal{Permutation::identity(degree_)};
  slot[x] = 0;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      Point y = g[orbit[i]];
      if (slot[y] >= 0) continue;
      slot[y] = static_cast<std::int32_t>(orbit.size());
      orbit.push_back(y);
      transversal.push_back(transversal[i] * g);
    }
  }
  StabilizerChain chain(degree_);
  std::vector<Permutation> kept;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      Permutation s = transversal[i] * g * transversal[slot[g[orbit[i]]]].inverse();
      if (!s.is_identity() && chain.extend(s)) kept.push_back(std::move(s));
    }
  }
  return PermGroup(degree_, std::move(kept));
}

SetwiseStabilizer PermGroup::setwise_stabilizer(std::span<const Point> subset) const {
  auto start = sorted_checked(subset, degree_);
  if (start.empty()) throw std::invalid_argument("setwise_stabilizer: empty subset");
  std::map<std::vector<Point>, std::size_t> slot{{start, 0}};
  std::vector<std::vector<Point>> orbit{start};
  std::vector<Permutation> transversal{Permutation::identity(degree_)};
  std::vector<Point> img(start.size());
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      image_sorted(g, orbit[i], img);
      if (slot.emplace(img, orbit.size()).second) {
        orbit.push_back(img);
        transversal.push_back(transversal[i] * g);
      }
    }
  }
  StabilizerChain chain(degree_);
  SetwiseStabilizer result;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : generators_) {
      image_sorted(g, orbit[i], img);
      Permutation s = transversal[i] * g * transversal[slot.at(img)].inverse();
      if (!s.is_identity() && chain.extend(s)) result.generators.push_back(std::move(s));
    }
  }
  result.orbit_length = orbit.size();
  result.order = order() / result.orbit_length;
  return result;
}

std::uint64_t PermGroup::setwise_stabilizer_order(std::span<const Point> subset) const {
  auto s = sorted_checked(subset, degree_);
  if (s.empty()) throw std::invalid_argument("setwise_stabilizer_order: empty subset");
  return order() / orbit_of_subset(s).size();
}

bool PermGroup::is_t_transitive(std::size_t t) const {
  if (t > 4) throw std::invalid_argument("is_t_transitive: t > 4 exceeds the supported range");
  if (t > degree_) return false;
  std::vector<Point> prefix(t);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  StabilizerChain c(degree_, prefix);
  for (const auto& g : generators_) c.extend(g);
  for (std::size_t i = 0; i < t; ++i) {
    if (c.basic_orbit(i).size() != degree_ - i) return false;
  }
  return true;
}

bool PermGroup::is_t_homogeneous(std::size_t t) const {
  if (t > 4) throw std::invalid_argument("is_t_homogeneous: t > 4 exceeds the supported range");
  if (t > degree_) return false;
  if (binomial(degree_, t) > kMaxSubsetCount) throw std::length_error("is_t_homogeneous: C(n,t) exceeds 10^7");
  std::vector<Point> first(t);
  std::iota(first.begin(), first.end(), Point{0});
  return orbit_of_subset(first).size() == binomial(degree_, t);
}

}  // namespace sqs
