#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "sqs/designs.hpp"
#include "sqs/perm.hpp"

namespace sqs {

/// Orbit incidence matrix of G on 3-subsets (rows) versus 4-subsets (columns).
/// entries[r][c] counts the blocks of column orbit c containing row
/// representative r.
struct OrbitIncidenceMatrix {
  std::size_t v = 0;
  std::vector<std::vector<Point>> rows;
  std::vector<std::vector<Point>> cols;
  std::vector<std::uint64_t> row_lengths;
  std::vector<std::uint64_t> col_lengths;
  std::vector<std::vector<std::uint32_t>> entries;

  std::size_t row_count() const { return rows.size(); }
  std::size_t col_count() const { return cols.size(); }
};

/// Throws std::invalid_argument when G's degree differs from v,
/// std::length_error when C(v, 4) exceeds 10^6.
OrbitIncidenceMatrix build_km_matrix(const PermGroup& g, std::size_t v);

/// All column selections covering every row exactly once, each sorted
/// ascending, listed in lexicographic order. Stops after `limit` selections.
std::vector<std::vector<std::size_t>> solve_exact_cover(
    const OrbitIncidenceMatrix& m, std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Union of the selected column orbits as a design.
Design assemble_design(const PermGroup& g, const OrbitIncidenceMatrix& m, const std::vector<std::size_t>& selection);

/// Flag-transitive SQS invariant under G: single-orbit covers whose block
/// stabilizer is transitive on the block. Sorted by block list.
std::vector<Design> find_flag_transitive_sqs(const PermGroup& g);

}  // namespace sqs
