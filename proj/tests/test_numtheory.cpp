#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sqs/numtheory.hpp"

using namespace sqs;

TEST_SUITE("numtheory") {
  TEST_CASE("is_prime agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK_MESSAGE(is_prime(n) == oracle::is_prime(n), n);
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2,3,5,7
  }

  TEST_CASE("prime_power") {
    auto pp = prime_power(243);
    REQUIRE(pp);
    CHECK(pp->p == 3);
    CHECK(pp->d == 5);
    CHECK(prime_power(7)->d == 1);
    CHECK_FALSE(prime_power(1));
    CHECK_FALSE(prime_power(12));
    CHECK_FALSE(prime_power(0));
  }

  TEST_CASE("checked_pow overflow") {
    CHECK(checked_pow(2, 63) == (1ULL << 63));
    CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
  }

  TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(3, 7) == 6);
  }

  TEST_CASE("Factorization round trips and divides") {
    for (std::uint64_t n = 1; n < 2000; ++n) CHECK(Factorization(n).value() == n);
    Factorization big = Factorization(600851475143ULL);
    CHECK(big.factored_string() == "71*839*1471*6857");
    CHECK(Factorization(12).divides(Factorization(360)));
    CHECK_FALSE(Factorization(7).divides(Factorization(360)));
    CHECK((Factorization(360) / 12).value() == 30);
    CHECK_THROWS_AS(Factorization(360) / 7, std::domain_error);
  }

  TEST_CASE("factorial past 64 bits") {
    auto f25 = Factorization::factorial(25);
    CHECK_FALSE(f25.value());
    CHECK(f25.exponents().at(2) == 22);
    CHECK(f25.exponents().at(5) == 6);
    CHECK(Factorization::factorial(10).value() == 3628800);
  }

  TEST_CASE("zsigmondy examples") {
    CHECK(zsigmondy(2, 6).empty());
    CHECK(zsigmondy(2, 4) == std::vector<std::uint64_t>{5});
    CHECK(zsigmondy(2, 1).empty());
    CHECK(zsigmondy(2, 5) == std::vector<std::uint64_t>{31});
    CHECK_THROWS_AS(zsigmondy(2, 63), std::overflow_error);
  }

  TEST_CASE("zsigmondy matches brute force for small q and n") {
    for (std::uint64_t q = 2; q <= 16; ++q) {
      for (unsigned n = 1; n <= 12; ++n) {
        if (n * std::log2(static_cast<double>(q)) > 40.0) continue;
        CHECK_MESSAGE(zsigmondy(q, n) == oracle::primitive_divisors(q, n), "q=" << q << " n=" << n);
      }
    }
  }

  TEST_CASE("primitive divisors exist outside the known exceptions") {
    for (std::uint64_t q = 2; q <= 16; ++q) {
      for (unsigned n = 2; n <= 20; ++n) {
        if (n * std::log2(static_cast<double>(q)) > 61.0) continue;
        const bool exception = (q == 2 && n == 6) || (n == 2 && ((q + 1) & q) == 0);
        CHECK_MESSAGE(zsigmondy(q, n).empty() == exception, "q=" << q << " n=" << n);
      }
    }
  }
}
