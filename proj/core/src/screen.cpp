#include "sqs/screen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sqs {

namespace {

constexpr std::size_t kMaxPad = 24;

std::uint64_t sqs_r(std::uint64_t v) { return (v - 1) * (v - 2) / 6; }

// First prime whose power in r exceeds its power in gx.
std::optional<std::uint64_t> missing_prime(const Factorization& r, const Factorization& gx) {
  for (auto [p, e] : r.exponents()) {
    auto it = gx.exponents().find(p);
    if (it == gx.exponents().end() || it->second < e) return p;
  }
  return std::nullopt;
}

FilterVerdict primitive_divisor_check(std::uint32_t d, const Factorization& bound) {
  for (auto z : zsigmondy(2, d - 1)) {
    if (!bound.divisible_by_prime(z)) {
      return {true, "Zsigmondy: primitive prime " + std::to_string(z) + " of 2^" + std::to_string(d - 1) +
                        "-1 does not divide |G_x|"};
    }
  }
  return {false, ""};
}

std::string divisibility_reason(std::uint64_t r, std::uint64_t p) {
  return "divisibility: r=" + std::to_string(r) + " does not divide |G_x| (prime " + std::to_string(p) + ")";
}

}  // namespace

bool hanani_admissible(std::uint64_t v) { return v >= 4 && (v % 6 == 2 || v % 6 == 4); }

bool divisibility_filter(std::uint64_t v, const Factorization& gx_order) {
  if (!hanani_admissible(v)) throw std::domain_error("divisibility_filter: v=" + std::to_string(v) + " is not admissible");
  return Factorization(sqs_r(v)).divides(gx_order);
}

bool divisibility_filter(std::uint64_t v, std::uint64_t gx_order) {
  return divisibility_filter(v, Factorization(gx_order));
}

FilterVerdict affine_sl_filter(std::uint32_t d, std::uint32_t a) {
  if (d > 40 || a == 0 || a >= d || d % a != 0) {
    throw std::invalid_argument("affine_sl_filter: need a a proper divisor of d and d <= 40");
  }
  const auto qa = checked_pow(2, a);
  auto bound = Factorization(a) * (qa - 1) * order_sl(d / a, qa);
  auto verdict = primitive_divisor_check(d, bound);
  if (verdict.eliminated) return verdict;
  const auto v = checked_pow(2, d);
  if (!divisibility_filter(v, bound)) {
    return {true, divisibility_reason(sqs_r(v), *missing_prime(Factorization(sqs_r(v)), bound))};
  }
  return {false, "passes"};
}

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Eliminated: return "ELIMINATED";
    case CaseStatus::Realized: return "REALIZED";
    case CaseStatus::External: return "EXTERNAL";
    case CaseStatus::NeedsDeep: return "NEEDS_DEEP";
  }
  return "?";
}

std::string to_string(EliminatedBy f) {
  switch (f) {
    case EliminatedBy::None: return "none";
    case EliminatedBy::Hanani: return "hanani";
    case EliminatedBy::Divisibility: return "divisibility";
    case EliminatedBy::Zsigmondy: return "zsigmondy";
  }
  return "?";
}

std::size_t ScreenReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const auto& c) { return c.status == s; }));
}

std::size_t ScreenReport::count(EliminatedBy f) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const auto& c) { return c.filter == f; }));
}

std::vector<const ScreenCase*> ScreenReport::survivors() const {
  std::vector<const ScreenCase*> out;
  for (const auto& c : cases) {
    if (c.status != CaseStatus::Eliminated) out.push_back(&c);
  }
  return out;
}

ScreenReport run_screen(std::uint32_t max_d, std::uint32_t max_q) {
  ScreenReport report;
  report.max_d = max_d;
  report.max_q = max_q;
  report.v_bound = std::max<std::uint64_t>(std::uint64_t{1} << max_d, std::uint64_t{max_q} * max_q * max_q + 1);
  for (auto& entry : enumerate_catalog(max_d, max_q)) {
    ScreenCase c;
    c.entry = std::move(entry);
    const auto v = c.entry.v;
    if (!hanani_admissible(v)) {
      c.status = CaseStatus::Eliminated;
      c.filter = EliminatedBy::Hanani;
      c.reason = "Hanani: v = " + std::to_string(v % 6) + " (mod 6)";
      report.cases.push_back(std::move(c));
      continue;
    }
    c.r = sqs_r(v);
    Factorization r(*c.r);
    if (auto p = missing_prime(r, c.entry.gx_order)) {
      c.status = CaseStatus::Eliminated;
      c.filter = EliminatedBy::Divisibility;
      c.reason = divisibility_reason(*c.r, *p);
    } else if (auto z = c.entry.affine_zsigmondy;
               z && primitive_divisor_check(z->first, c.entry.gx_order).eliminated) {
      c.status = CaseStatus::Eliminated;
      c.filter = EliminatedBy::Zsigmondy;
      c.reason = primitive_divisor_check(z->first, c.entry.gx_order).reason;
    } else {
      switch (c.entry.fate) {
        case SurvivorFate::Realized: c.status = CaseStatus::Realized; break;
        case SurvivorFate::External: c.status = CaseStatus::External; break;
        case SurvivorFate::NeedsDeep: c.status = CaseStatus::NeedsDeep; break;
      }
      c.reason = c.entry.fate_note;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

std::string format_report_text(const ScreenReport& report) {
  std::vector<std::vector<std::string>> rows{{"family", "group", "params", "v", "r", "|G_x|", "status", "reason"}};
  for (const auto& c : report.cases) {
    rows.push_back({c.entry.family, c.entry.group, c.entry.params, std::to_string(c.entry.v),
                    c.r ? std::to_string(*c.r) : "-", c.entry.gx_order.to_string(), to_string(c.status), c.reason});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], std::min(row[i].size(), kMaxPad));
  }
  std::ostringstream out;
  out << "screen max_d=" << report.max_d << " max_q=" << report.max_q << " v_bound=" << report.v_bound << "\n\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] > row[i].size() ? width[i] - row[i].size() + 2 : 2, ' ');
    }
    out << line << '\n';
  }
  out << "\ncases: " << report.cases.size() << '\n';
  out << "eliminated: " << report.count(CaseStatus::Eliminated) << " (hanani " << report.count(EliminatedBy::Hanani)
      << ", divisibility " << report.count(EliminatedBy::Divisibility) << ", zsigmondy "
      << report.count(EliminatedBy::Zsigmondy) << ")\n";
  out << "realized: " << report.count(CaseStatus::Realized) << '\n';
  out << "external: " << report.count(CaseStatus::External) << '\n';
  out << "needs_deep: " << report.count(CaseStatus::NeedsDeep) << '\n';
  out << "\nsurvivors:\n";
  for (const auto* c : report.survivors()) {
    out << "  " << c->entry.family << ' ' << c->entry.group << " v=" << c->entry.v << ' ' << to_string(c->status) << ": "
        << c->reason << '\n';
  }
  return out.str();
}

std::string format_report_json(const ScreenReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["max_d"] = report.max_d;
  j["max_q"] = report.max_q;
  j["v_bound"] = report.v_bound;
  ordered_json cases = ordered_json::array();
  for (const auto& c : report.cases) {
    ordered_json row;
    row["family"] = c.entry.family;
    row["group"] = c.entry.group;
    row["params"] = c.entry.params;
    row["v"] = c.entry.v;
    row["r"] = c.r ? ordered_json(*c.r) : ordered_json(nullptr);
    row["gx_order"] = c.entry.gx_order.to_string();
    row["status"] = to_string(c.status);
    row["eliminated_by"] = to_string(c.filter);
    row["reason"] = c.reason;
    cases.push_back(std::move(row));
  }
  j["cases"] = std::move(cases);
  ordered_json summary;
  summary["cases"] = report.cases.size();
  summary["eliminated"] = report.count(CaseStatus::Eliminated);
  summary["hanani"] = report.count(EliminatedBy::Hanani);
  summary["divisibility"] = report.count(EliminatedBy::Divisibility);
  summary["zsigmondy"] = report.count(EliminatedBy::Zsigmondy);
  summary["realized"] = report.count(CaseStatus::Realized);
  summary["external"] = report.count(CaseStatus::External);
  summary["needs_deep"] = report.count(CaseStatus::NeedsDeep);
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

}  // namespace sqs
