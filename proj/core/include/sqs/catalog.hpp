#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqs/numtheory.hpp"

namespace sqs {

// Group orders as exact factorizations.
Factorization order_gl(std::uint32_t n, std::uint64_t q);
Factorization order_sl(std::uint32_t n, std::uint64_t q);
Factorization order_pgl(std::uint32_t n, std::uint64_t q);
Factorization order_psl(std::uint32_t n, std::uint64_t q);
/// |Sp(2m, q)|.
Factorization order_sp(std::uint32_t two_m, std::uint64_t q);
Factorization order_g2(std::uint64_t q);
Factorization order_psu3(std::uint64_t q);
Factorization order_suzuki(std::uint64_t q);
Factorization order_ree(std::uint64_t q);

namespace sporadic {
inline constexpr std::uint64_t kM11 = 7920;
inline constexpr std::uint64_t kM12 = 95040;
inline constexpr std::uint64_t kM22 = 443520;
inline constexpr std::uint64_t kM23 = 10200960;
inline constexpr std::uint64_t kM24 = 244823040;
inline constexpr std::uint64_t kHS = 44352000;
inline constexpr std::uint64_t kCo3 = 495766656000;
}  // namespace sporadic

/// What happens to a case that survives every arithmetic filter.
enum class SurvivorFate { Realized, External, NeedsDeep };

/// One row of the 2-transitive group list: family "A1".."A8" (affine) or
/// "B1".."B13" (semisimple), its degree and the largest point-stabilizer order
/// over all groups admitted by the family row.
struct CatalogEntry {
  std::string family;
  std::string group;
  std::string params;
  std::uint64_t v = 0;
  Factorization gx_order;
  SurvivorFate fate = SurvivorFate::NeedsDeep;
  std::string fate_note;  // construction tag, citation or pointer
  /// For affine SL/Sp/G2 rows with p = 2: (d, a) for the primitive-divisor filter.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> affine_zsigmondy;
};

/// Entries with affine degree p^d <= 2^max_d, Lie-type q <= max_q and degree
/// at most max(2^max_d, max_q^3 + 1); A_v for 5 <= v <= max_q + 1.
/// Ordered by family, then parameters. Throws std::invalid_argument unless
/// 3 <= max_d <= 16 and 4 <= max_q <= 1024.
std::vector<CatalogEntry> enumerate_catalog(std::uint32_t max_d, std::uint32_t max_q);

}  // namespace sqs
