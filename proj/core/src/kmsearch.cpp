#include "sqs/kmsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqs {

namespace {

constexpr std::uint64_t kMaxColumnsSubsets = 1'000'000;

class CoverSearch {
 public:
  CoverSearch(const OrbitIncidenceMatrix& m, std::size_t limit)
      : m_(m), limit_(limit), covered_(m.row_count(), 0) {
    for (std::size_t c = 0; c < m.col_count(); ++c) {
      bool usable = true;
      for (std::size_t r = 0; r < m.row_count(); ++r) usable = usable && m.entries[r][c] <= 1;
      usable_.push_back(usable);
    }
  }

  std::vector<std::vector<std::size_t>> run() {
    recurse();
    std::sort(solutions_.begin(), solutions_.end());
    return std::move(solutions_);
  }

 private:
  void recurse() {
    if (solutions_.size() >= limit_) return;
    auto row = std::find(covered_.begin(), covered_.end(), 0u);
    if (row == covered_.end()) {
      auto sel = chosen_;
      std::sort(sel.begin(), sel.end());
      solutions_.push_back(std::move(sel));
      return;
    }
    const std::size_t r = static_cast<std::size_t>(row - covered_.begin());
    for (std::size_t c = 0; c < m_.col_count(); ++c) {
      if (!usable_[c] || m_.entries[r][c] != 1 || !fits(c)) continue;
      toggle(c, +1);
      chosen_.push_back(c);
      recurse();
      chosen_.pop_back();
      toggle(c, -1);
    }
  }

  bool fits(std::size_t c) const {
    for (std::size_t r = 0; r < m_.row_count(); ++r) {
      if (covered_[r] + m_.entries[r][c] > 1) return false;
    }
    return true;
  }

  void toggle(std::size_t c, int sign) {
    for (std::size_t r = 0; r < m_.row_count(); ++r) {
      covered_[r] = static_cast<std::uint32_t>(static_cast<int>(covered_[r]) + sign * static_cast<int>(m_.entries[r][c]));
    }
  }

  const OrbitIncidenceMatrix& m_;
  std::size_t limit_;
  std::vector<std::uint32_t> covered_;
  std::vector<bool> usable_;
  std::vector<std::size_t> chosen_;
  std::vector<std::vector<std::size_t>> solutions_;
};

bool stabilizer_transitive_on_block(const PermGroup& g, const std::vector<Point>& block) {
  auto stab = g.setwise_stabilizer(block);
  std::vector<Point> reached{block.front()};
  for (std::size_t i = 0; i < reached.size(); ++i) {
    for (const auto& s : stab.generators) {
      Point y = s[reached[i]];
      if (std::find(reached.begin(), reached.end(), y) == reached.end()) reached.push_back(y);
    }
  }
  return reached.size() == block.size();
}

}  // namespace

OrbitIncidenceMatrix build_km_matrix(const PermGroup& g, std::size_t v) {
  if (g.degree() != v) throw std::invalid_argument("build_km_matrix: group degree differs from v");
  if (v < 4) throw std::invalid_argument("build_km_matrix: need v >= 4");
  if (binomial(v, 4) > kMaxColumnsSubsets) throw std::length_error("build_km_matrix: C(v,4) exceeds 10^6");
  auto triples = g.orbits_on_ksubsets(3);
  auto quads = g.orbits_on_ksubsets(4);
  OrbitIncidenceMatrix m;
  m.v = v;
  for (const auto& o : triples.orbits) {
    m.rows.push_back(o.representative);
    m.row_lengths.push_back(o.length);
  }
  for (const auto& o : quads.orbits) {
    m.cols.push_back(o.representative);
    m.col_lengths.push_back(o.length);
  }
  m.entries.assign(m.row_count(), std::vector<std::uint32_t>(m.col_count(), 0));
  std::vector<Point> quad(4);
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    const auto& t = m.rows[r];
    for (Point x = 0; x < v; ++x) {
      if (std::find(t.begin(), t.end(), x) != t.end()) continue;
      std::copy(t.begin(), t.end(), quad.begin());
      quad[3] = x;
      std::sort(quad.begin(), quad.end());
      ++m.entries[r][quads.orbit_index(quad)];
    }
  }
  return m;
}

std::vector<std::vector<std::size_t>> solve_exact_cover(const OrbitIncidenceMatrix& m, std::size_t limit) {
  return CoverSearch(m, limit).run();
}

Design assemble_design(const PermGroup& g, const OrbitIncidenceMatrix& m, const std::vector<std::size_t>& selection) {
  std::vector<Block> blocks;
  for (auto c : selection) {
    auto orbit = g.orbit_of_subset(m.cols.at(c));
    blocks.insert(blocks.end(), orbit.begin(), orbit.end());
  }
  return Design(m.v, 4, std::move(blocks));
}

std::vector<Design> find_flag_transitive_sqs(const PermGroup& g) {
  auto m = build_km_matrix(g, g.degree());
  std::vector<Design> out;
  for (std::size_t c = 0; c < m.col_count(); ++c) {
    bool covers = true;
    for (std::size_t r = 0; r < m.row_count() && covers; ++r) covers = m.entries[r][c] == 1;
    if (!covers || !stabilizer_transitive_on_block(g, m.cols[c])) continue;
    auto d = assemble_design(g, m, {c});
    if (!verify_sqs(d) || !is_flag_transitive(d, g)) {
      throw std::logic_error("find_flag_transitive_sqs: candidate failed verification");
    }
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end(), [](const Design& a, const Design& b) { return a.blocks() < b.blocks(); });
  return out;
}

}  // namespace sqs
