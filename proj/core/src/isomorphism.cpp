#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

#include "sqs/designs.hpp"

namespace sqs {

namespace {

using Triple = std::array<Point, 3>;

// Number of Pasch configurations through each point of a partial triple system.
std::vector<std::uint64_t> pasch_counts(std::size_t v, const std::vector<Triple>& triples) {
  std::vector<std::int32_t> third(v * v, -1);
  std::vector<std::vector<std::pair<Point, Point>>> through(v);
  for (const auto& t : triples) {
    for (int i = 0; i < 3; ++i) {
      Point a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
      third[a * v + b] = third[b * v + a] = static_cast<std::int32_t>(c);
      through[a].emplace_back(b, c);
    }
  }
  std::vector<std::uint64_t> out(v, 0);
  for (std::size_t a = 0; a < v; ++a) {
    const auto& lines = through[a];
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        auto [b, c] = lines[i];
        auto [d, e] = lines[j];
        auto t1 = third[b * v + d], t2 = third[c * v + e];
        if (t1 >= 0 && t1 == t2) ++out[a];
        auto t3 = third[b * v + e], t4 = third[c * v + d];
        if (t3 >= 0 && t3 == t4) ++out[a];
      }
    }
  }
  return out;
}

std::vector<Triple> to_triples(const std::vector<Block>& blocks) {
  std::vector<Triple> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back({b[0], b[1], b[2]});
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Design& d1, const Design& d2)
      : d1_(d1), d2_(d2), inv1_(point_invariants(d1)), inv2_(point_invariants(d2)) {
    // Every (k-1)-subset of a Steiner system lies in one block.
    const std::size_t k = d2.k();
    std::vector<Point> sub(k - 1);
    for (std::size_t i = 0; i < d2.block_count(); ++i) {
      const auto& b = d2.block(i);
      for (std::size_t skip = 0; skip < k; ++skip) {
        std::size_t n = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j != skip) sub[n++] = b[j];
        }
        face_to_block_.emplace(subset_rank(sub), static_cast<std::uint32_t>(i));
      }
    }
  }

  bool invariants_match() const {
    auto a = inv1_, b = inv2_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  std::optional<Permutation> run() {
    State s{std::vector<std::int32_t>(d1_.v(), -1), std::vector<std::int32_t>(d2_.v(), -1)};
    if (search(s)) {
      std::vector<Point> images(d1_.v());
      for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>(result_[i]);
      return Permutation(std::move(images));
    }
    return std::nullopt;
  }

 private:
  struct State {
    std::vector<std::int32_t> f, finv;
  };

  bool assign(State& s, Point x, Point y) const {
    if (s.finv[y] >= 0 || inv1_[x] != inv2_[y]) return false;
    s.f[x] = static_cast<std::int32_t>(y);
    s.finv[y] = static_cast<std::int32_t>(x);
    return true;
  }

  bool propagate(State& s) const {
    const std::size_t k = d1_.k();
    std::vector<Point> img;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& b : d1_.blocks()) {
        img.clear();
        std::int32_t missing = -1;
        for (Point p : b) {
          if (s.f[p] >= 0) {
            img.push_back(static_cast<Point>(s.f[p]));
          } else if (missing < 0) {
            missing = static_cast<std::int32_t>(p);
          } else {
            missing = -2;
          }
        }
        std::sort(img.begin(), img.end());
        if (img.size() == k) {
          if (!d2_.index_of(img)) return false;
        } else if (img.size() == k - 1) {
          auto it = face_to_block_.find(subset_rank(img));
          if (it == face_to_block_.end()) return false;
          const auto& target = d2_.block(it->second);
          Point y = 0;
          for (Point p : target) {
            if (!std::binary_search(img.begin(), img.end(), p)) y = p;
          }
          if (!assign(s, static_cast<Point>(missing), y)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(State& s) {
    if (!propagate(s)) return false;
    auto it = std::find(s.f.begin(), s.f.end(), -1);
    if (it == s.f.end()) {
      result_ = s.f;
      return true;
    }
    const auto x = static_cast<Point>(it - s.f.begin());
    for (Point y = 0; y < d2_.v(); ++y) {
      if (s.finv[y] >= 0 || inv1_[x] != inv2_[y]) continue;
      State next = s;
      assign(next, x, y);
      if (search(next)) return true;
    }
    return false;
  }

  const Design& d1_;
  const Design& d2_;
  std::vector<std::uint64_t> inv1_, inv2_;
  std::unordered_map<std::uint64_t, std::uint32_t> face_to_block_;
  std::vector<std::int32_t> result_;
};

}  // namespace

std::vector<std::uint64_t> point_invariants(const Design& d) {
  const std::size_t v = d.v();
  std::vector<std::uint64_t> degree(v, 0);
  for (const auto& b : d.blocks()) {
    for (Point p : b) ++degree[p];
  }
  std::vector<std::uint64_t> local(v, 0);
  if (d.k() == 3) {
    local = pasch_counts(v, to_triples(d.blocks()));
  } else if (d.k() == 4) {
    // Pasch count of the derived triple system at each point.
    for (Point x = 0; x < v; ++x) {
      std::vector<Triple> triples;
      for (const auto& b : d.blocks()) {
        if (!std::binary_search(b.begin(), b.end(), x)) continue;
        Triple t{};
        std::size_t n = 0;
        for (Point p : b) {
          if (p != x) t[n++] = p;
        }
        triples.push_back(t);
      }
      for (auto c : pasch_counts(v, triples)) local[x] += c;
    }
  }
  std::vector<std::uint64_t> out(v);
  for (std::size_t i = 0; i < v; ++i) out[i] = degree[i] << 40 | local[i];
  return out;
}

std::optional<Permutation> are_isomorphic(const Design& d1, const Design& d2) {
  if (d1.k() != 3 && d1.k() != 4) throw std::invalid_argument("are_isomorphic: only k = 3 or k = 4 is supported");
  const std::size_t limit = d1.k() == 3 ? 40 : 32;
  if (d1.v() > limit || d2.v() > limit) {
    throw std::length_error("are_isomorphic: v exceeds " + std::to_string(limit) + " for k = " + std::to_string(d1.k()));
  }
  if (d1.k() != d2.k() || d1.v() != d2.v() || d1.block_count() != d2.block_count()) return std::nullopt;
  const std::size_t t = d1.k() - 1;
  if (!verify_steiner(d1, t) || !verify_steiner(d2, t)) {
    throw std::invalid_argument("are_isomorphic: both designs must be Steiner systems");
  }
  IsoSearch search(d1, d2);
  if (!search.invariants_match()) return std::nullopt;
  return search.run();
}

std::vector<Design> isomorphism_class_representatives(const std::vector<Design>& designs) {
  std::vector<Design> out;
  for (const auto& d : designs) {
    bool known = std::any_of(out.begin(), out.end(), [&](const Design& e) { return are_isomorphic(d, e).has_value(); });
    if (!known) out.push_back(d);
  }
  return out;
}

}  // namespace sqs
