#include "sqs/groups.hpp"

#include <array>
#include <charconv>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "sqs/numtheory.hpp"

namespace sqs {

namespace {

PrimePower require_prime_power(std::uint32_t q, const char* who) {
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument(std::string(who) + ": " + std::to_string(q) + " is not a prime power");
  return *pp;
}

FiniteField field_of_order(std::uint32_t q, const char* who) {
  auto pp = require_prime_power(q, who);
  return make_field(static_cast<std::uint32_t>(pp.p), pp.d);
}

template <typename Fn>
Permutation field_map(const FiniteField& f, Fn&& fn) {
  std::vector<Point> images(f.order());
  for (std::uint32_t i = 0; i < f.order(); ++i) images[i] = fn(f.element(i)).index();
  return Permutation(std::move(images));
}

// Linear map on GF(p)^d given row-major, acting on base-p encoded vectors.
Permutation linear_map(const std::vector<std::vector<std::uint32_t>>& m, std::uint32_t d, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(checked_pow(p, d));
  std::vector<Point> images(n);
  std::vector<std::uint32_t> v(d), w(d);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t t = x;
    for (std::uint32_t i = 0; i < d; ++i) {
      v[i] = t % p;
      t /= p;
    }
    std::uint32_t y = 0;
    for (std::uint32_t i = d; i-- > 0;) {
      std::uint64_t s = 0;
      for (std::uint32_t j = 0; j < d; ++j) s += std::uint64_t{m[i][j]} * v[j];
      y = y * p + static_cast<std::uint32_t>(s % p);
    }
    images[x] = y;
  }
  return Permutation(std::move(images));
}

Permutation translation(std::uint32_t d, std::uint32_t p, std::uint32_t axis) {
  const std::uint32_t n = static_cast<std::uint32_t>(checked_pow(p, d));
  const std::uint32_t scale = static_cast<std::uint32_t>(checked_pow(p, axis));
  std::vector<Point> images(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t digit = (x / scale) % p;
    images[x] = x - digit * scale + ((digit + 1) % p) * scale;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> projective_base_generators(const ProjectiveLine& line, bool special) {
  const auto& f = line.field();
  auto zero = f.zero(), one = f.one();
  auto w = f.primitive_element();
  std::vector<Permutation> gens;
  gens.push_back(line.mobius(one, one, zero, one));  // x + 1
  if (special) {
    gens.push_back(line.mobius(w * w, zero, zero, one));  // w^2 x
    gens.push_back(line.mobius(zero, -one, one, zero));   // -1/x
  } else {
    gens.push_back(line.mobius(w, zero, zero, one));     // w x
    gens.push_back(line.mobius(zero, one, one, zero));   // 1/x
  }
  return gens;
}

ProjectiveLine projective_line(std::uint32_t q, const char* who) {
  if (q < 4) throw std::invalid_argument(std::string(who) + ": q must be >= 4");
  return ProjectiveLine(field_of_order(q, who));
}

std::uint16_t gf2_compose(std::uint16_t a, std::uint16_t b) {
  // Column i of (b after a) is b applied to column i of a.
  auto apply = [](std::uint16_t m, std::uint32_t v) {
    std::uint32_t out = 0;
    for (int i = 0; i < 4; ++i) {
      if (v >> i & 1) out ^= (m >> (4 * i)) & 0xF;
    }
    return out;
  };
  std::uint16_t out = 0;
  for (int i = 0; i < 4; ++i) out |= static_cast<std::uint16_t>(apply(b, (a >> (4 * i)) & 0xF) << (4 * i));
  return out;
}

bool gf2_invertible(std::uint16_t code) {
  std::array<std::uint32_t, 4> rows{};
  for (int i = 0; i < 4; ++i) rows[i] = (code >> (4 * i)) & 0xF;
  int rank = 0;
  for (int bit = 0; bit < 4; ++bit) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r) {
      if (rows[r] >> bit & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < 4; ++r) {
      if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == 4;
}

constexpr std::uint16_t kGf2Identity = 0x8421;

int gf2_order(std::uint16_t code) {
  std::uint16_t m = code;
  for (int k = 1; k <= 20; ++k) {
    if (m == kGf2Identity) return k;
    m = gf2_compose(m, code);
  }
  return 0;
}

std::set<std::uint64_t> element_orders(const PermGroup& g) {
  std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(g.degree())};
  std::vector<Permutation> elems{Permutation::identity(g.degree())};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : g.generators()) {
      auto h = elems[i] * s;
      if (seen.insert(h).second) elems.push_back(std::move(h));
    }
  }
  std::set<std::uint64_t> orders;
  for (const auto& e : elems) orders.insert(e.order());
  return orders;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<FieldElement> ProjectiveLine::element_at(Point p) const {
  if (p >= size()) throw std::out_of_range("ProjectiveLine::element_at: point out of range");
  if (p == infinity()) return std::nullopt;
  return field_.element(p - 1);
}

Permutation ProjectiveLine::mobius(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                   const FieldElement& d) const {
  if ((a * d - b * c).is_zero()) throw std::invalid_argument("mobius: singular matrix");
  std::vector<Point> images(size());
  images[infinity()] = c.is_zero() ? infinity() : point_of(a / c);
  for (std::uint32_t i = 0; i < field_.order(); ++i) {
    auto x = field_.element(i);
    auto den = c * x + d;
    images[i + 1] = den.is_zero() ? infinity() : point_of((a * x + b) / den);
  }
  return Permutation(std::move(images));
}

Permutation ProjectiveLine::frobenius() const {
  std::vector<Point> images(size());
  images[infinity()] = infinity();
  for (std::uint32_t i = 0; i < field_.order(); ++i) images[i + 1] = point_of(field_.element(i).frobenius());
  return Permutation(std::move(images));
}

PermGroup agl(std::uint32_t d, std::uint32_t p) {
  if (d == 0) throw std::invalid_argument("agl: dimension must be >= 1");
  if (!is_prime(p)) throw std::invalid_argument("agl: p must be prime");
  if (checked_pow(p, d) > PermGroup::kMaxDegree) throw std::length_error("agl: p^d exceeds the degree guard");
  if (d == 1) return agl1(p);
  const std::uint32_t n = static_cast<std::uint32_t>(checked_pow(p, d));
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < d; ++i) gens.push_back(translation(d, p, i));

  using Matrix = std::vector<std::vector<std::uint32_t>>;
  Matrix cycle(d, std::vector<std::uint32_t>(d, 0));  // e_j -> e_{j+1}
  for (std::uint32_t j = 0; j < d; ++j) cycle[(j + 1) % d][j] = 1;
  Matrix transvection(d, std::vector<std::uint32_t>(d, 0));  // e_1 -> e_1 + e_0
  for (std::uint32_t i = 0; i < d; ++i) transvection[i][i] = 1;
  transvection[0][1] = 1;
  gens.push_back(linear_map(cycle, d, p));
  gens.push_back(linear_map(transvection, d, p));
  if (p > 2) {
    Matrix diag(d, std::vector<std::uint32_t>(d, 0));
    for (std::uint32_t i = 0; i < d; ++i) diag[i][i] = 1;
    diag[0][0] = make_field(p, 1).primitive_element().index();
    gens.push_back(linear_map(diag, d, p));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup agl1(std::uint32_t q) {
  auto f = field_of_order(q, "agl1");
  auto one = f.one();
  auto w = f.primitive_element();
  std::vector<Permutation> gens{field_map(f, [&](const FieldElement& x) { return x + one; })};
  if (q > 2) gens.push_back(field_map(f, [&](const FieldElement& x) { return w * x; }));
  return PermGroup(q, std::move(gens));
}

PermGroup a_gamma_l1(std::uint32_t q) {
  auto f = field_of_order(q, "a_gamma_l1");
  auto gens = agl1(q).generators();
  if (f.degree() > 1) gens.push_back(field_map(f, [](const FieldElement& x) { return x.frobenius(); }));
  return PermGroup(q, std::move(gens));
}

PermGroup psl2(std::uint32_t q) {
  auto line = projective_line(q, "psl2");
  return PermGroup(line.size(), projective_base_generators(line, true));
}

PermGroup pgl2(std::uint32_t q) {
  auto line = projective_line(q, "pgl2");
  return PermGroup(line.size(), projective_base_generators(line, false));
}

PermGroup psigmal2(std::uint32_t q) {
  auto line = projective_line(q, "psigmal2");
  auto gens = projective_base_generators(line, true);
  if (line.field().degree() > 1) gens.push_back(line.frobenius());
  return PermGroup(line.size(), std::move(gens));
}

PermGroup pgammal2(std::uint32_t q) {
  auto line = projective_line(q, "pgammal2");
  auto gens = projective_base_generators(line, false);
  if (line.field().degree() > 1) gens.push_back(line.frobenius());
  return PermGroup(line.size(), std::move(gens));
}

Permutation gf2_linear_permutation(std::uint16_t code) {
  if (!gf2_invertible(code)) throw std::invalid_argument("gf2_linear_permutation: singular matrix");
  std::vector<Point> images(16);
  for (std::uint32_t v = 0; v < 16; ++v) {
    std::uint32_t out = 0;
    for (int i = 0; i < 4; ++i) {
      if (v >> i & 1) out ^= (code >> (4 * i)) & 0xF;
    }
    images[v] = out;
  }
  return Permutation(std::move(images));
}

A7LinearGenerators a7_linear_generators() {
  static const A7LinearGenerators found = [] {
    std::vector<std::uint16_t> order7, order5;
    for (std::uint32_t code = 0; code <= 0xFFFF; ++code) {
      auto c = static_cast<std::uint16_t>(code);
      if (!gf2_invertible(c)) continue;
      int o = gf2_order(c);
      if (o == 7) order7.push_back(c);
      if (o == 5) order5.push_back(c);
    }
    const std::set<std::uint64_t> spectrum{1, 2, 3, 4, 5, 6, 7};
    for (auto a : order7) {
      for (auto b : order5) {
        PermGroup g(16, {gf2_linear_permutation(a), gf2_linear_permutation(b)});
        if (g.order() != 2520) continue;
        if (element_orders(g) != spectrum) continue;
        return A7LinearGenerators{a, b};
      }
    }
    throw std::logic_error("a7_linear_generators: no A7 found in GL(4,2)");
  }();
  return found;
}

PermGroup a7_16() {
  auto lin = a7_linear_generators();
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < 4; ++i) gens.push_back(translation(4, 2, i));
  gens.push_back(gf2_linear_permutation(lin.order7));
  gens.push_back(gf2_linear_permutation(lin.order5));
  return PermGroup(16, std::move(gens));
}

PermGroup netto_group(std::uint32_t q) {
  if (q % 2 == 0) throw std::invalid_argument("netto_group: q must be odd");
  auto f = field_of_order(q, "netto_group");
  auto one = f.one();
  auto w = f.primitive_element();
  auto w2 = w * w;
  std::vector<Permutation> gens{field_map(f, [&](const FieldElement& x) { return x + one; })};
  if (!w2.is_one()) gens.push_back(field_map(f, [&](const FieldElement& x) { return w2 * x; }));
  return PermGroup(q, std::move(gens));
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
    if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return PermGroup(n, std::move(gens));
}

// ---------------------------------------------------------------------------

std::string GroupSpec::to_string() const {
  auto q_str = std::to_string(q);
  switch (family) {
    case GroupFamily::AGL: return "AGL(" + std::to_string(d) + "," + q_str + ")";
    case GroupFamily::AGammaL1: return "AGammaL(1," + q_str + ")";
    case GroupFamily::PSL2: return "PSL(2," + q_str + ")";
    case GroupFamily::PGL2: return "PGL(2," + q_str + ")";
    case GroupFamily::PSigmaL2: return "PSigmaL(2," + q_str + ")";
    case GroupFamily::PGammaL2: return "PGammaL(2," + q_str + ")";
    case GroupFamily::A7_16: return "A7_16";
    case GroupFamily::Netto: return "Netto(" + q_str + ")";
    case GroupFamily::Symmetric: return "Sym(" + q_str + ")";
  }
  return "?";
}

GroupSpec parse_group_spec(std::string_view raw) {
  std::string s;
  for (char c : raw) {
    if (c != ' ') s += c;
  }
  auto replace = [&](std::string_view from, std::string_view to) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from)) s.replace(pos, from.size(), to);
  };
  replace("\xCE\x93", "Gamma");  // Γ
  replace("\xCE\xA3", "Sigma");  // Σ

  auto fail = [&]() -> GroupSpec {
    throw std::invalid_argument("unknown group spec '" + std::string(raw) +
                                "' (expected AGL(d,p), AGammaL(1,q), PSL(2,q), PGL(2,q), PSigmaL(2,q), "
                                "PGammaL(2,q), A7_16, Netto(q) or Sym(n))");
  };
  if (s == "A7_16") return {GroupFamily::A7_16, 4, 16};

  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return fail();
  std::string name = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::vector<std::uint32_t> args;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + comma, v);
    if (ec != std::errc() || ptr != body.data() + comma || comma == pos) return fail();
    args.push_back(v);
    pos = comma + 1;
  }

  if (name == "Netto" && args.size() == 1) return {GroupFamily::Netto, 1, args[0]};
  if ((name == "Sym" || name == "S") && args.size() == 1) return {GroupFamily::Symmetric, 1, args[0]};
  if (args.size() != 2) return fail();
  const auto d = args[0], q = args[1];
  if (name == "AGL") {
    if (d > 1 && !is_prime(q)) {
      throw std::invalid_argument("AGL(d,q) with d > 1 needs prime q, got '" + std::string(raw) + "'");
    }
    return {GroupFamily::AGL, d, q};
  }
  if (d == 1 && name == "AGammaL") return {GroupFamily::AGammaL1, 1, q};
  if (d == 2 && name == "PSL") return {GroupFamily::PSL2, 2, q};
  if (d == 2 && name == "PGL") return {GroupFamily::PGL2, 2, q};
  if (d == 2 && name == "PSigmaL") return {GroupFamily::PSigmaL2, 2, q};
  if (d == 2 && name == "PGammaL") return {GroupFamily::PGammaL2, 2, q};
  return fail();
}

PermGroup build_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::AGL: return spec.d == 1 ? agl1(spec.q) : agl(spec.d, spec.q);
    case GroupFamily::AGammaL1: return a_gamma_l1(spec.q);
    case GroupFamily::PSL2: return psl2(spec.q);
    case GroupFamily::PGL2: return pgl2(spec.q);
    case GroupFamily::PSigmaL2: return psigmal2(spec.q);
    case GroupFamily::PGammaL2: return pgammal2(spec.q);
    case GroupFamily::A7_16: return a7_16();
    case GroupFamily::Netto: return netto_group(spec.q);
    case GroupFamily::Symmetric: return symmetric_group(spec.q);
  }
  throw std::logic_error("build_group: unhandled family");
}

}  // namespace sqs
