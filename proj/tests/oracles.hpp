#pragma once

// Brute-force reference implementations, independent of the library's
// algorithms. Only usable on small inputs.

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>
#include <vector>

#include "sqs/perm.hpp"

namespace oracle {

using sqs::Permutation;
using sqs::Point;

// All elements of <gens> by closure.
inline std::vector<Permutation> elements(const std::vector<Permutation>& gens, std::size_t degree) {
  std::unordered_set<Permutation, sqs::PermutationHash> seen{Permutation::identity(degree)};
  std::vector<Permutation> out{Permutation::identity(degree)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto h = out[i] * g;
      if (seen.insert(h).second) out.push_back(std::move(h));
    }
  }
  return out;
}

inline std::vector<Point> image_sorted(const Permutation& g, const std::vector<Point>& s) {
  std::vector<Point> out;
  for (Point x : s) out.push_back(g[x]);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::vector<Point>> subset_orbit(const std::vector<Permutation>& elems, const std::vector<Point>& s) {
  std::set<std::vector<Point>> out;
  for (const auto& g : elems) out.insert(image_sorted(g, s));
  return out;
}

inline std::vector<std::vector<Point>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur;
  auto rec = [&](auto&& self, Point start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Point x = start; x < n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Primes dividing q^n - 1 but no q^k - 1 with k < n, by trial division.
inline std::vector<std::uint64_t> primitive_divisors(std::uint64_t q, unsigned n) {
  std::uint64_t m = ipow(q, n) - 1;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  std::vector<std::uint64_t> out;
  for (auto p : primes) {
    bool primitive = true;
    for (unsigned k = 1; k < n && primitive; ++k) primitive = (ipow(q, k) - 1) % p != 0;
    if (primitive) out.push_back(p);
  }
  return out;
}

}  // namespace oracle
