#include "sqs/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqs {

namespace {

Factorization power(std::uint64_t base, std::uint64_t exp) {
  Factorization b(base), out;
  for (std::uint64_t i = 0; i < exp; ++i) out *= b;
  return out;
}

Factorization f(std::uint64_t n) { return Factorization(n); }

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) { return checked_pow(base, exp); }

std::string qstr(std::uint64_t q) { return std::to_string(q); }

struct Builder {
  std::vector<CatalogEntry> out;
  std::uint64_t v_limit = 0;

  CatalogEntry& add(std::string family, std::string group, std::string params, std::uint64_t v, Factorization gx,
                    SurvivorFate fate, std::string note) {
    CatalogEntry e;
    e.family = std::move(family);
    e.group = std::move(group);
    e.params = std::move(params);
    e.v = v;
    e.gx_order = std::move(gx);
    e.fate = fate;
    e.fate_note = std::move(note);
    out.push_back(std::move(e));
    return out.back();
  }
};

const char* kNoConstruction = "no construction or citation settles this case";

}  // namespace

Factorization order_gl(std::uint32_t n, std::uint64_t q) {
  Factorization out = power(q, std::uint64_t{n} * (n - 1) / 2);
  for (std::uint32_t i = 1; i <= n; ++i) out *= pow_u64(q, i) - 1;
  return out;
}

Factorization order_sl(std::uint32_t n, std::uint64_t q) { return order_gl(n, q) / (q - 1); }

Factorization order_pgl(std::uint32_t n, std::uint64_t q) { return order_gl(n, q) / (q - 1); }

Factorization order_psl(std::uint32_t n, std::uint64_t q) { return order_sl(n, q) / gcd(n, q - 1); }

Factorization order_sp(std::uint32_t two_m, std::uint64_t q) {
  if (two_m % 2 != 0) throw std::invalid_argument("order_sp: dimension must be even");
  const std::uint32_t m = two_m / 2;
  Factorization out = power(q, std::uint64_t{m} * m);
  for (std::uint32_t i = 1; i <= m; ++i) out *= pow_u64(q, 2 * i) - 1;
  return out;
}

Factorization order_g2(std::uint64_t q) { return power(q, 6) * (pow_u64(q, 6) - 1) * (q * q - 1); }

Factorization order_psu3(std::uint64_t q) {
  return power(q, 3) * (pow_u64(q, 3) + 1) * (q * q - 1) / gcd(3, q + 1);
}

Factorization order_suzuki(std::uint64_t q) { return power(q, 2) * (q * q + 1) * (q - 1); }

Factorization order_ree(std::uint64_t q) { return power(q, 3) * (pow_u64(q, 3) + 1) * (q - 1); }

std::vector<CatalogEntry> enumerate_catalog(std::uint32_t max_d, std::uint32_t max_q) {
  if (max_d < 3 || max_d > 16) throw std::invalid_argument("enumerate_catalog: max_d must lie in [3, 16]");
  if (max_q < 4 || max_q > 1024) throw std::invalid_argument("enumerate_catalog: max_q must lie in [4, 1024]");
  const std::uint64_t affine_limit = std::uint64_t{1} << max_d;
  Builder b;
  b.v_limit = std::max<std::uint64_t>(affine_limit, std::uint64_t{max_q} * max_q * max_q + 1);
  const auto v_limit = b.v_limit;

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= std::max<std::uint64_t>(affine_limit, max_q); ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  auto dims = [&](std::uint64_t p) {
    std::vector<std::uint32_t> out;
    std::uint64_t v = p;
    for (std::uint32_t d = 1; v <= affine_limit; ++d, v *= p) out.push_back(d);
    return out;
  };

  // (A1) G <= AΓL(1, p^d).
  for (auto p : primes) {
    for (auto d : dims(p)) {
      const auto v = pow_u64(p, d);
      if (v < 5) continue;
      auto fate = p == 2 ? SurvivorFate::Realized : SurvivorFate::NeedsDeep;
      std::string note = kNoConstruction;
      if (p == 2) {
        note = "boolean:" + std::to_string(d) + " with " +
               (d == 5 ? "G = AGammaL(1,32)" : "AGL(1," + qstr(v) + ") <= G <= AGammaL(1," + qstr(v) + ")");
      }
      b.add("A1", "AGammaL(1," + qstr(v) + ")", "p=" + qstr(p) + " d=" + std::to_string(d), v, f(d) * (v - 1), fate,
            note);
    }
  }
  // (A2) G0 ⊵ SL(d/a, p^a), a a proper divisor of d.
  for (auto p : primes) {
    for (auto d : dims(p)) {
      for (std::uint32_t a = 1; a < d; ++a) {
        if (d % a != 0) continue;
        const auto v = pow_u64(p, d);
        if (v < 5) continue;
        const auto qa = pow_u64(p, a);
        const std::uint32_t n = d / a;
        std::string params = "p=" + qstr(p) + " d=" + std::to_string(d) + " a=" + std::to_string(a);
        auto gx = f(a) * order_gl(n, qa);
        if (p == 2 && a == 1) {
          b.add("A2", "AGL(" + std::to_string(d) + ",2)", params, v, gx, SurvivorFate::Realized,
                "boolean:" + std::to_string(d) + " with AGL(" + std::to_string(d) + ",2)");
        } else {
          auto& e = b.add("A2", "SL(" + std::to_string(n) + "," + qstr(qa) + ")", params, v, gx, SurvivorFate::NeedsDeep,
                          kNoConstruction);
          if (p == 2) e.affine_zsigmondy = std::make_pair(d, a);
        }
      }
    }
  }
  // (A3) G0 ⊵ Sp(d/a, p^a), d/a even and at least 4.
  for (auto p : primes) {
    for (auto d : dims(p)) {
      for (std::uint32_t a = 1; a <= d; ++a) {
        if (d % a != 0 || (d / a) % 2 != 0 || d / a < 4) continue;
        const auto v = pow_u64(p, d);
        const auto qa = pow_u64(p, a);
        auto gx = f(a) * (qa - 1) * order_sp(d / a, qa);
        auto& e = b.add("A3", "Sp(" + std::to_string(d / a) + "," + qstr(qa) + ")",
                        "p=" + qstr(p) + " d=" + std::to_string(d) + " a=" + std::to_string(a), v, gx,
                        SurvivorFate::NeedsDeep, kNoConstruction);
        if (p == 2) e.affine_zsigmondy = std::make_pair(d, a);
      }
    }
  }
  // (A4) G0 ⊵ G2(2^a)', d = 6a.
  for (std::uint32_t a = 1; 6 * a <= max_d; ++a) {
    const auto qa = pow_u64(2, a);
    const std::uint32_t d = 6 * a;
    auto& e = b.add("A4", "G2(" + qstr(qa) + ")'", "p=2 d=" + std::to_string(d) + " a=" + std::to_string(a),
                    pow_u64(2, d), f(a) * (qa - 1) * order_g2(qa), SurvivorFate::NeedsDeep,
                    "primitive-divisor elimination for G2 not mechanized");
    e.affine_zsigmondy = std::make_pair(d, a);
  }
  // (A5) G0 = A6 or A7 on 2^4 points.
  if (affine_limit >= 16) {
    b.add("A5", "A6", "p=2 d=4", 16, f(360), SurvivorFate::NeedsDeep, kNoConstruction);
    b.add("A5", "A7", "p=2 d=4", 16, f(2520), SurvivorFate::Realized, "boolean:4 with A7_16");
  }
  // (A6) G0 ⊵ SL(2,3) or SL(2,5).
  {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> degrees{{5, 2},  {7, 2},  {11, 2}, {19, 2},
                                                                 {23, 2}, {29, 2}, {59, 2}, {3, 4}};
    std::sort(degrees.begin(), degrees.end(),
              [](auto x, auto y) { return pow_u64(x.first, x.second) < pow_u64(y.first, y.second); });
    for (auto [p, d] : degrees) {
      const auto v = pow_u64(p, d);
      if (v > affine_limit) continue;
      b.add("A6", "SL(2,3) or SL(2,5)", "p=" + qstr(p) + " d=" + std::to_string(d), v, order_gl(d, p),
            SurvivorFate::NeedsDeep, kNoConstruction);
    }
  }
  // (A7) extraspecial 2^{1+4} normal in G0, v = 3^4.
  if (affine_limit >= 81) {
    b.add("A7", "2^(1+4).S5", "p=3 d=4", 81, f(3840), SurvivorFate::NeedsDeep, kNoConstruction);
  }
  // (A8) G0 = SL(2,13), v = 3^6.
  if (affine_limit >= 729) {
    b.add("A8", "SL(2,13)", "p=3 d=6", 729, f(2184), SurvivorFate::NeedsDeep, kNoConstruction);
  }

  std::vector<std::uint64_t> prime_powers;
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    if (prime_power(q)) prime_powers.push_back(q);
  }
  auto field_degree = [](std::uint64_t q) { return prime_power(q)->d; };

  // (B1) A_v; the largest group is S_v.
  for (std::uint64_t v = 5; v <= std::uint64_t{max_q} + 1 && v <= v_limit; ++v) {
    b.add("B1", "A" + std::to_string(v), "v=" + std::to_string(v), v, Factorization::factorial(v - 1),
          SurvivorFate::External, "Kantor: A_v acts on no non-trivial 3-(v,k,1) design");
  }
  // (B2) PSL(d, q) on projective points, Aut(N) = PΓL (with graph automorphism for d >= 3).
  for (auto q : prime_powers) {
    if (q < 5) continue;
    const auto fq = field_degree(q);
    auto gx = f(fq) * q * (q - 1);
    const auto v = q + 1;
    std::string params = "d=2 q=" + qstr(q);
    std::string group = "PSL(2," + qstr(q) + ")";
    auto pp = prime_power(q);
    if (pp->p == 3) {
      std::string range = fq % 2 == 1 ? "PSL(2," + qstr(q) + ") <= G <= PGammaL(2," + qstr(q) + ")"
                                       : "G <= PGammaL(2," + qstr(q) + ") 3-transitive";
      b.add("B2", group, params, v, gx, SurvivorFate::Realized, "pgl:" + std::to_string(fq) + " with " + range);
    } else if (q % 12 == 7) {
      b.add("B2", group, params, v, gx, SurvivorFate::Realized, "netto:" + qstr(q) + " with PSL(2," + qstr(q) + ")");
    } else {
      b.add("B2", group, params, v, gx, SurvivorFate::NeedsDeep,
            "PSL(2,q), q = 1 (mod 4): triple stabilizer S3 cannot sit in block stabilizer A4; search refutes q = 13, 25");
    }
  }
  for (std::uint32_t d = 3; d <= max_d; ++d) {
    for (auto q : prime_powers) {
      std::uint64_t v = 0, qi = 1;
      bool too_big = false;
      for (std::uint32_t i = 0; i < d; ++i) {
        v += qi;
        if (v > v_limit) {
          too_big = true;
          break;
        }
        qi *= q;
      }
      if (too_big) break;
      auto gx = f(2) * field_degree(q) * order_pgl(d, q) / v;
      b.add("B2", "PSL(" + std::to_string(d) + "," + qstr(q) + ")", "d=" + std::to_string(d) + " q=" + qstr(q), v, gx,
            SurvivorFate::NeedsDeep, "hyperplane induction down to PSL(3,q) on an odd number of points");
    }
  }
  // (B3) PSU(3, q), v = q^3 + 1; Aut = PΓU(3, q) of order 2f q^3 (q^3+1)(q^2-1).
  for (auto q : prime_powers) {
    if (q < 3) continue;
    const auto v = pow_u64(q, 3) + 1;
    if (v > v_limit) break;
    auto gx = f(2) * field_degree(q) * power(q, 3) * (q * q - 1);
    b.add("B3", "PSU(3," + qstr(q) + ")", "q=" + qstr(q), v, gx, SurvivorFate::NeedsDeep, kNoConstruction);
  }
  // (B4) Sz(q), q = 2^(2e+1) > 2.
  for (std::uint32_t e = 1;; ++e) {
    const auto q = pow_u64(2, 2 * e + 1);
    if (q > max_q || q * q + 1 > v_limit) break;
    b.add("B4", "Sz(" + qstr(q) + ")", "q=" + qstr(q), q * q + 1, f(2 * e + 1) * power(q, 2) * (q - 1),
          SurvivorFate::NeedsDeep, kNoConstruction);
  }
  // (B5) Ree(q), q = 3^(2e+1) > 3.
  for (std::uint32_t e = 1;; ++e) {
    const auto q = pow_u64(3, 2 * e + 1);
    if (q > max_q || pow_u64(q, 3) + 1 > v_limit) break;
    b.add("B5", "Ree(" + qstr(q) + ")", "q=" + qstr(q), pow_u64(q, 3) + 1, f(2 * e + 1) * power(q, 3) * (q - 1),
          SurvivorFate::NeedsDeep, kNoConstruction);
  }
  // (B6) Sp(2d, 2) on 2^(2d-1) ± 2^(d-1) points; Out trivial.
  for (std::uint32_t d = 3; d <= max_d; ++d) {
    for (int sign : {+1, -1}) {
      const auto base = pow_u64(2, 2 * d - 1);
      const auto shift = pow_u64(2, d - 1);
      const auto v = sign > 0 ? base + shift : base - shift;
      if (v > v_limit) continue;
      b.add("B6", "Sp(" + std::to_string(2 * d) + ",2)", "d=" + std::to_string(d) + (sign > 0 ? " sign=+" : " sign=-"),
            v, order_sp(2 * d, 2) / v, SurvivorFate::NeedsDeep, "elements fixing exactly 3 points (minimal p-degree)");
    }
  }
  auto sporadic_row = [&](const char* family, const char* group, std::uint64_t v, std::uint64_t gx,
                          SurvivorFate fate = SurvivorFate::NeedsDeep, std::string note = kNoConstruction) {
    if (v <= v_limit) b.add(family, group, "v=" + std::to_string(v), v, f(gx), fate, std::move(note));
  };
  sporadic_row("B7", "PSL(2,11)", 11, 660 / 11);
  sporadic_row("B8", "PSL(2,8)", 28, 1512 / 28);
  sporadic_row("B9", "M11", 11, sporadic::kM11 / 11);
  sporadic_row("B9", "M12", 12, sporadic::kM12 / 12);
  sporadic_row("B9", "M22", 22, 2 * sporadic::kM22 / 22, SurvivorFate::External,
               "Kantor: M22 and Aut(M22) act only on the 3-(22,6,1) design");
  sporadic_row("B9", "M23", 23, sporadic::kM23 / 23);
  sporadic_row("B9", "M24", 24, sporadic::kM24 / 24);
  sporadic_row("B10", "M11", 12, sporadic::kM11 / 12);
  sporadic_row("B11", "A7", 15, 2520 / 15);
  sporadic_row("B12", "HS", 176, 2 * sporadic::kHS / 176);
  sporadic_row("B13", "Co3", 276, sporadic::kCo3 / 276);
  return std::move(b.out);
}

}  // namespace sqs
