#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sqs {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t d = 0;
};

/// (p, d) with q = p^d, or nullopt when q is not a prime power (q < 2 included).
std::optional<PrimePower> prime_power(std::uint64_t q);

/// base^exp, throwing std::overflow_error past 2^64.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Multiplicative order of a modulo the prime p (p must not divide a).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/// Exact natural number kept as a prime factorization. Group orders in the
/// catalog outgrow 64 bits (factorials, Sp(2d,2)), divisibility does not care.
class Factorization {
 public:
  Factorization() = default;  // the number 1
  /// Factors n (Pollard rho). n must be >= 1.
  explicit Factorization(std::uint64_t n);

  static Factorization factorial(std::uint64_t n);

  Factorization& operator*=(const Factorization& other);
  friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }
  Factorization& operator*=(std::uint64_t n) { return *this *= Factorization(n); }
  friend Factorization operator*(Factorization a, std::uint64_t n) { return a *= n; }

  /// Exact division; throws std::domain_error when other does not divide *this.
  Factorization& operator/=(const Factorization& other);
  friend Factorization operator/(Factorization a, const Factorization& b) { return a /= b; }
  Factorization& operator/=(std::uint64_t n) { return *this /= Factorization(n); }
  friend Factorization operator/(Factorization a, std::uint64_t n) { return a /= n; }

  bool divides(const Factorization& other) const;
  bool divisible_by_prime(std::uint64_t p) const { return exponents_.count(p) > 0; }

  /// Value if it fits in 64 bits.
  std::optional<std::uint64_t> value() const;
  /// Decimal if it fits in 64 bits, otherwise "2^7*3^4*5".
  std::string to_string() const;
  std::string factored_string() const;

  const std::map<std::uint64_t, std::uint32_t>& exponents() const { return exponents_; }

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::map<std::uint64_t, std::uint32_t> exponents_;
};

/// Primes p with p | q^n - 1 and p not dividing q^k - 1 for 1 <= k < n.
/// Ascending. Throws std::overflow_error when q^n exceeds 2^62.
std::vector<std::uint64_t> zsigmondy(std::uint64_t q, std::uint32_t n);

}  // namespace sqs
