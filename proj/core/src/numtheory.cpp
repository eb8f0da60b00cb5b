#include "sqs/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqs {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  // Brent's variant with a deterministic sequence of constants.
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    constexpr u64 batch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, std::uint32_t>& out) {
  if (n == 1) return;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(u64 q) {
  if (q < 2) return std::nullopt;
  Factorization f(q);
  if (f.exponents().size() != 1) return std::nullopt;
  auto [p, d] = *f.exponents().begin();
  return PrimePower{p, d};
}

u64 checked_pow(u64 base, std::uint32_t exp) {
  u64 result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) throw std::overflow_error("checked_pow: overflow");
    result *= base;
  }
  return result;
}

u64 multiplicative_order(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("multiplicative_order: p divides a");
  u64 order = p - 1;
  const Factorization factors(p - 1);
  for (auto [prime, exp] : factors.exponents()) {
    for (std::uint32_t i = 0; i < exp; ++i) {
      if (powmod(a, order / prime, p) == 1) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

Factorization::Factorization(u64 n) {
  if (n == 0) throw std::domain_error("Factorization: zero has no factorization");
  factor_into(n, exponents_);
}

Factorization Factorization::factorial(u64 n) {
  Factorization f;
  for (u64 p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    std::uint32_t e = 0;
    for (u64 pk = p; pk <= n; pk *= p) {
      e += static_cast<std::uint32_t>(n / pk);
      if (pk > n / p) break;
    }
    f.exponents_[p] = e;
  }
  return f;
}

Factorization& Factorization::operator*=(const Factorization& other) {
  for (auto [p, e] : other.exponents_) exponents_[p] += e;
  return *this;
}

Factorization& Factorization::operator/=(const Factorization& other) {
  if (!other.divides(*this)) {
    throw std::domain_error("Factorization: inexact division by " + other.to_string());
  }
  for (auto [p, e] : other.exponents_) {
    auto it = exponents_.find(p);
    it->second -= e;
    if (it->second == 0) exponents_.erase(it);
  }
  return *this;
}

bool Factorization::divides(const Factorization& other) const {
  for (auto [p, e] : exponents_) {
    auto it = other.exponents_.find(p);
    if (it == other.exponents_.end() || it->second < e) return false;
  }
  return true;
}

std::optional<u64> Factorization::value() const {
  u128 v = 1;
  for (auto [p, e] : exponents_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      v *= p;
      if (v > UINT64_MAX) return std::nullopt;
    }
  }
  return static_cast<u64>(v);
}

std::string Factorization::factored_string() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (auto [p, e] : exponents_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::string Factorization::to_string() const {
  if (auto v = value()) return std::to_string(*v);
  return factored_string();
}

std::vector<u64> zsigmondy(u64 q, std::uint32_t n) {
  if (q < 2 || n < 1) throw std::invalid_argument("zsigmondy: need q >= 2 and n >= 1");
  u64 qn = checked_pow(q, n);
  if (qn > (1ULL << 62)) throw std::overflow_error("zsigmondy: q^n exceeds 2^62");
  std::vector<u64> result;
  if (qn - 1 == 1) return result;
  const Factorization factors(qn - 1);
  for (auto [p, e] : factors.exponents()) {
    if (q % p == 0) continue;
    if (multiplicative_order(q % p, p) == n) result.push_back(p);
  }
  return result;
}

}  // namespace sqs
