#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqs/catalog.hpp"
#include "sqs/numtheory.hpp"

namespace sqs {

/// v >= 4 and v = 2 or 4 (mod 6).
bool hanani_admissible(std::uint64_t v);

/// r = (v-1)(v-2)/6 divides |G_x|. Throws std::domain_error for inadmissible v.
bool divisibility_filter(std::uint64_t v, const Factorization& gx_order);
bool divisibility_filter(std::uint64_t v, std::uint64_t gx_order);

struct FilterVerdict {
  bool eliminated = false;
  std::string reason;
};

/// Affine SL case on 2^d points with a a proper divisor of d: primitive prime
/// divisors of 2^(d-1) - 1 against a (2^a - 1) |SL(d/a, 2^a)|, then plain
/// divisibility. Throws std::invalid_argument unless a | d, a < d, d <= 40.
FilterVerdict affine_sl_filter(std::uint32_t d, std::uint32_t a);

enum class CaseStatus { Eliminated, Realized, External, NeedsDeep };
enum class EliminatedBy { None, Hanani, Divisibility, Zsigmondy };

std::string to_string(CaseStatus s);
std::string to_string(EliminatedBy f);

struct ScreenCase {
  CatalogEntry entry;
  std::optional<std::uint64_t> r;  // absent when v is not admissible
  CaseStatus status = CaseStatus::NeedsDeep;
  EliminatedBy filter = EliminatedBy::None;
  std::string reason;
};

struct ScreenReport {
  std::uint32_t max_d = 0;
  std::uint32_t max_q = 0;
  std::uint64_t v_bound = 0;
  std::vector<ScreenCase> cases;

  std::size_t count(CaseStatus s) const;
  std::size_t count(EliminatedBy f) const;
  std::vector<const ScreenCase*> survivors() const;
};

/// Filters in order Hanani, divisibility, primitive-divisor. Same guards as
/// enumerate_catalog.
ScreenReport run_screen(std::uint32_t max_d, std::uint32_t max_q);

std::string format_report_text(const ScreenReport& report);
std::string format_report_json(const ScreenReport& report);

}  // namespace sqs
