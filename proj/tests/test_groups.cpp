#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sqs/groups.hpp"

using namespace sqs;

namespace {

// Möbius maps over a prime field by direct integer arithmetic; label 0 is ∞,
// label i + 1 is the residue i.
std::set<Permutation> prime_mobius(std::uint32_t p, bool squares_only) {
  auto inv = [p](std::uint64_t x) {
    for (std::uint64_t y = 1; y < p; ++y) {
      if (x * y % p == 1) return y;
    }
    return std::uint64_t{0};
  };
  std::set<std::uint64_t> squares;
  for (std::uint64_t x = 1; x < p; ++x) squares.insert(x * x % p);
  std::set<Permutation> out;
  for (std::uint64_t a = 0; a < p; ++a)
    for (std::uint64_t b = 0; b < p; ++b)
      for (std::uint64_t c = 0; c < p; ++c)
        for (std::uint64_t d = 0; d < p; ++d) {
          const std::uint64_t det = (a * d + p * p - b * c % p) % p;
          if (det == 0 || (squares_only && !squares.count(det))) continue;
          std::vector<Point> img(p + 1);
          img[0] = c == 0 ? 0 : static_cast<Point>(a * inv(c) % p + 1);
          for (std::uint64_t x = 0; x < p; ++x) {
            const std::uint64_t den = (c * x + d) % p;
            img[x + 1] = den == 0 ? 0 : static_cast<Point>((a * x + b) % p * inv(den) % p + 1);
          }
          out.insert(Permutation(img));
        }
  return out;
}

std::uint64_t prime_power_exponent(std::uint64_t q) {
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint64_t e = 0;
  for (; q > 1; q /= p) ++e;
  return e;
}

std::uint64_t psl_order(std::uint64_t q) { return q * (q * q - 1) / (q % 2 ? 2 : 1); }

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("projective groups over prime fields match brute-force Möbius maps") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
      auto pgl = oracle::elements(pgl2(p).generators(), p + 1);
      auto psl = oracle::elements(psl2(p).generators(), p + 1);
      CHECK(std::set<Permutation>(pgl.begin(), pgl.end()) == prime_mobius(p, false));
      CHECK(std::set<Permutation>(psl.begin(), psl.end()) == prime_mobius(p, true));
    }
  }

  TEST_CASE("projective group orders") {
    for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 31u, 32u, 49u, 64u, 81u}) {
      const std::uint64_t f = prime_power_exponent(q);
      CAPTURE(q);
      CHECK(psl2(q).order() == psl_order(q));
      CHECK(pgl2(q).order() == static_cast<std::uint64_t>(q) * (q * q - 1ULL));
      CHECK(psigmal2(q).order() == psl_order(q) * f);
      CHECK(pgammal2(q).order() == static_cast<std::uint64_t>(q) * (q * q - 1ULL) * f);
      CHECK(is_t_transitive(pgl2(q), 3));
      CHECK(is_t_transitive(psl2(q), 2));
    }
    CHECK_THROWS_AS(psl2(3), std::invalid_argument);
    CHECK_THROWS_AS(psl2(6), std::invalid_argument);
  }

  TEST_CASE("affine group orders") {
    auto gl = [](std::uint64_t d, std::uint64_t p) {
      std::uint64_t r = 1, pd = oracle::ipow(p, static_cast<unsigned>(d));
      for (std::uint64_t i = 0; i < d; ++i) r *= pd - oracle::ipow(p, static_cast<unsigned>(i));
      return r;
    };
    for (auto [d, p] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {1, 5}, {2, 2}, {2, 3}, {3, 2}, {4, 2}, {5, 2}, {2, 5}, {3, 3}, {6, 2}}) {
      CAPTURE(d);
      CAPTURE(p);
      CHECK(agl(d, p).order() == oracle::ipow(p, d) * gl(d, p));
    }
    CHECK(agl(5, 2).order() == 319979520);
    CHECK(agl1(8).order() == 56);
    CHECK(a_gamma_l1(8).order() == 168);
    CHECK(a_gamma_l1(32).order() == 4960);
    CHECK(a_gamma_l1(9).order() == 144);
    CHECK(agl(1, 7).order() == agl1(7).order());
    CHECK(is_t_transitive(agl(4, 2), 3));
    CHECK_THROWS_AS(agl(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(agl(14, 2), std::length_error);
  }

  TEST_CASE("affine group on GF(2)^d preserves XOR relations") {
    auto g = agl(4, 2);
    for (const auto& s : g.generators()) {
      for (Point a = 0; a < 16; ++a)
        for (Point b = 0; b < 16; ++b)
          for (Point c = 0; c < 16; ++c) {
            if ((a ^ b ^ c) >= 16) continue;
            CHECK((s[a] ^ s[b] ^ s[c]) == s[a ^ b ^ c]);
          }
    }
  }

  TEST_CASE("A7 inside AGL(4,2)") {
    auto g = a7_16();
    CHECK(g.order() == 40320);
    CHECK(agl(4, 2).contains(g.generators().front()));
    for (const auto& s : g.generators()) CHECK(agl(4, 2).contains(s));
    CHECK(is_t_transitive(g, 2));
    CHECK(is_t_transitive(g, 3));
    CHECK_FALSE(is_t_transitive(g, 4));
    auto stab = g.point_stabilizer(0);
    CHECK(stab.order() == 2520);
    // Element orders of the point stabilizer are exactly those of A7.
    std::set<std::uint64_t> orders;
    for (const auto& e : oracle::elements(stab.generators(), 16)) orders.insert(e.order());
    CHECK(orders == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
    auto gens = a7_linear_generators();
    CHECK(gf2_linear_permutation(gens.order7).order() == 7);
    CHECK(gf2_linear_permutation(gens.order5).order() == 5);
    CHECK_THROWS_AS(gf2_linear_permutation(0), std::invalid_argument);
  }

  TEST_CASE("Netto group") {
    for (std::uint32_t q : {7u, 19u, 25u, 31u}) {
      auto g = netto_group(q);
      CHECK(g.order() == static_cast<std::uint64_t>(q) * (q - 1) / 2);
      CHECK(is_t_homogeneous(g, 2) == (q % 4 == 3));
    }
    CHECK_THROWS_AS(netto_group(8), std::invalid_argument);
  }

  TEST_CASE("Frobenius fixes the prime subfield") {
    ProjectiveLine line(make_field(3, 2));
    auto f = line.frobenius();
    CHECK(f.order() == 2);
    for (Point p = 0; p <= 3; ++p) CHECK(f[p] == p);
    CHECK_THROWS_AS(line.mobius(line.field().zero(), line.field().zero(), line.field().one(), line.field().one()),
                    std::invalid_argument);
  }

  TEST_CASE("group spec parsing") {
    CHECK(parse_group_spec("AGL(3,2)").to_string() == "AGL(3,2)");
    CHECK(parse_group_spec("AΓL(1,32)").family == GroupFamily::AGammaL1);
    CHECK(parse_group_spec("PSigmaL(2,9)").family == GroupFamily::PSigmaL2);
    CHECK(parse_group_spec("PΓL(2,8)").family == GroupFamily::PGammaL2);
    CHECK(parse_group_spec("Sym(5)").q == 5);
    for (const char* s : {"AGL(3,2)", "AGL(1,8)", "AGammaL(1,32)", "PSL(2,7)", "PGL(2,9)", "PSigmaL(2,9)",
                          "PGammaL(2,9)", "A7_16", "Netto(19)", "Sym(6)"}) {
      CHECK(parse_group_spec(parse_group_spec(s).to_string()).to_string() == parse_group_spec(s).to_string());
    }
    CHECK(build_group(parse_group_spec("PSL(2,13)")).order() == 1092);
    CHECK_THROWS_AS(parse_group_spec("PSL(3,4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("AGL(2,4)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("garbage"), std::invalid_argument);
  }
}
