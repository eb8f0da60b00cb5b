#include "sqs/constructs.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "sqs/field.hpp"
#include "sqs/groups.hpp"
#include "sqs/numtheory.hpp"

namespace sqs {

namespace {

void require_netto_q(std::uint32_t q, const char* who) {
  if (q % 12 != 7 || !prime_power(q)) {
    throw std::invalid_argument(std::string(who) + ": q must be a prime power with q = 7 (mod 12), got " +
                                std::to_string(q));
  }
  if (q > 1000) throw std::length_error(std::string(who) + ": q exceeds 1000");
}

FiniteField field_of(std::uint32_t q) {
  auto pp = prime_power(q);
  return make_field(static_cast<std::uint32_t>(pp->p), pp->d);
}

}  // namespace

Design orbit_design(const PermGroup& g, std::span<const Point> base_block) {
  auto blocks = g.orbit_of_subset(base_block);
  return Design(g.degree(), base_block.size(), std::move(blocks));
}

Design boolean_sqs(std::uint32_t d) {
  if (d < 3 || d > 6) throw std::invalid_argument("boolean_sqs: need 3 <= d <= 6");
  const Point n = Point{1} << d;
  std::vector<Block> blocks;
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      for (Point c = b + 1; c < n; ++c) {
        Point x = a ^ b ^ c;
        if (x > c) blocks.push_back({a, b, c, x});
      }
    }
  }
  return Design(n, 4, std::move(blocks));
}

Design pgl_sqs(std::uint32_t d) {
  if (d < 1 || d > 4) throw std::invalid_argument("pgl_sqs: need 1 <= d <= 4");
  const auto q = static_cast<std::uint32_t>(checked_pow(3, d));
  if (q == 3) return Design(4, 4, {{0, 1, 2, 3}});
  ProjectiveLine line(make_field(3, d));
  const auto& f = line.field();
  std::vector<Point> base{ProjectiveLine::infinity(), line.point_of(f.element(0)), line.point_of(f.element(1)),
                          line.point_of(f.element(2))};
  return orbit_design(pgl2(q), base);
}

Design netto_sqs(std::uint32_t q) {
  require_netto_q(q, "netto_sqs");
  ProjectiveLine line(field_of(q));
  const auto& f = line.field();
  std::vector<Point> base{ProjectiveLine::infinity(), line.point_of(f.zero()), line.point_of(f.one()),
                          line.point_of(primitive_sixth_root(f))};
  std::sort(base.begin(), base.end());
  return orbit_design(psl2(q), base);
}

Design netto_triples(std::uint32_t q) {
  require_netto_q(q, "netto_triples");
  auto f = field_of(q);
  std::vector<Point> base{f.zero().index(), f.one().index(), primitive_sixth_root(f).index()};
  std::sort(base.begin(), base.end());
  return orbit_design(netto_group(q), base);
}

Design ag3_lines(std::uint32_t d) {
  if (d < 1 || d > 3) throw std::invalid_argument("ag3_lines: need 1 <= d <= 3");
  auto f = make_field(3, d);
  const std::uint32_t n = f.order();
  std::vector<Block> blocks;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      auto c = (-(f.element(a) + f.element(b))).index();
      if (c > b) blocks.push_back({a, b, c});
    }
  }
  return Design(n, 3, std::move(blocks));
}

std::string ConstructionTag::to_string() const {
  const char* name = "";
  switch (kind) {
    case ConstructionKind::Boolean: name = "boolean"; break;
    case ConstructionKind::Pgl: name = "pgl"; break;
    case ConstructionKind::Netto: name = "netto"; break;
    case ConstructionKind::NettoTriples: name = "netto3"; break;
    case ConstructionKind::Ag3Lines: name = "ag3lines"; break;
  }
  return std::string(name) + ":" + std::to_string(parameter);
}

ConstructionTag parse_construction(std::string_view name) {
  auto fail = [&]() -> ConstructionTag {
    throw std::invalid_argument("unknown construction '" + std::string(name) +
                                "' (expected boolean:d, pgl:d, netto:q, netto3:q or ag3lines:d)");
  };
  auto colon = name.find(':');
  if (colon == std::string_view::npos) return fail();
  auto family = name.substr(0, colon);
  auto arg = name.substr(colon + 1);
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty()) return fail();
  if (family == "boolean") return {ConstructionKind::Boolean, value};
  if (family == "pgl") return {ConstructionKind::Pgl, value};
  if (family == "netto") return {ConstructionKind::Netto, value};
  if (family == "netto3") return {ConstructionKind::NettoTriples, value};
  if (family == "ag3lines") return {ConstructionKind::Ag3Lines, value};
  return fail();
}

Design construct(const ConstructionTag& tag) {
  switch (tag.kind) {
    case ConstructionKind::Boolean: return boolean_sqs(tag.parameter);
    case ConstructionKind::Pgl: return pgl_sqs(tag.parameter);
    case ConstructionKind::Netto: return netto_sqs(tag.parameter);
    case ConstructionKind::NettoTriples: return netto_triples(tag.parameter);
    case ConstructionKind::Ag3Lines: return ag3_lines(tag.parameter);
  }
  throw std::logic_error("construct: unhandled kind");
}

}  // namespace sqs
