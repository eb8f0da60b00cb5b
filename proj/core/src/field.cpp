#include "sqs/field.hpp"

#include <charconv>
#include <stdexcept>

#include "sqs/numtheory.hpp"

namespace sqs {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // monic, constant term first, size d+1

  std::vector<std::uint32_t> decode(std::uint32_t index) const {
    std::vector<std::uint32_t> c(d);
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = index % p;
      index /= p;
    }
    return c;
  }

  std::uint32_t encode(std::span<const std::uint32_t> c) const {
    std::uint32_t index = 0;
    for (std::uint32_t i = d; i-- > 0;) index = index * p + c[i];
    return index;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    auto x = decode(a);
    auto y = decode(b);
    std::vector<std::uint64_t> prod(2 * d - 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (x[i] == 0) continue;
      for (std::uint32_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p;
    }
    // Reduce using x^d = -(m_0 + ... + m_{d-1} x^{d-1}).
    for (std::size_t k = prod.size(); k-- > d;) {
      std::uint64_t lead = prod[k];
      if (lead == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < d; ++i) {
        prod[k - d + i] = (prod[k - d + i] + (p - modulus[i]) % p * lead) % p;
      }
    }
    std::vector<std::uint32_t> c(d);
    for (std::uint32_t i = 0; i < d; ++i) c[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(c);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1, base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first, no trailing zeros except "0"

void trim(Poly& f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over Z_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg && !(f.size() == 1 && f[0] == 0)) {
    trim(f);
    if (f.size() <= dg) break;
    std::uint32_t lead = f.back();
    std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + std::uint64_t{p - lead} * g[i]) % p);
    }
    trim(f);
  }
  trim(f);
  return f;
}

bool is_zero_poly(const Poly& f) { return f.size() == 1 && f[0] == 0; }

// Brute force: no monic factor of degree 1..floor(d/2).
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; k <= d / 2; ++k) {
    const std::uint64_t count = checked_pow(p, k);
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      Poly g(k + 1);
      std::uint64_t x = lower;
      for (std::uint32_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[k] = 1;
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

std::uint64_t order_of(const detail::FieldData& f, std::uint32_t a) {
  if (a == 0) throw std::domain_error("element_order: zero has no multiplicative order");
  std::uint64_t order = f.q - 1;
  const Factorization factors(f.q - 1);
  for (auto [prime, exp] : factors.exponents()) {
    for (std::uint32_t i = 0; i < exp; ++i) {
      if (f.pow(a, order / prime) == 1) {
        order /= prime;
      } else {
        break;
      }
    }
  }
  return order;
}

}  // namespace

FiniteField::FiniteField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw std::invalid_argument("make_field: characteristic " + std::to_string(p) + " is not prime");
  if (d == 0) throw std::invalid_argument("make_field: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::length_error("make_field: p^d exceeds 2^20");
  }
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->d = d;
  data->q = static_cast<std::uint32_t>(q);

  for (std::uint32_t lower = 0; lower < data->q; ++lower) {
    Poly f(d + 1);
    std::uint32_t x = lower;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[d] = 1;
    if (is_irreducible(f, p)) {
      data->modulus = std::move(f);
      break;
    }
  }
  if (data->modulus.empty()) throw std::logic_error("make_field: no irreducible polynomial found");
  return FiniteField(std::move(data));
}

FiniteField make_field(std::uint32_t p, std::uint32_t d) { return FiniteField::make(p, d); }

FiniteField parse_field(std::string_view spec) {
  auto fail = [&] { throw std::invalid_argument("parse_field: expected GF(q) or GF(p^d), got '" + std::string(spec) + "'"); };
  if (spec.size() < 5 || spec.substr(0, 3) != "GF(" || spec.back() != ')') fail();
  std::string_view body = spec.substr(3, spec.size() - 4);
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail();
    return v;
  };
  auto caret = body.find('^');
  if (caret != std::string_view::npos) {
    auto p = parse_uint(body.substr(0, caret));
    auto d = parse_uint(body.substr(caret + 1));
    if (p > UINT32_MAX || d > 64) fail();
    return make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(d));
  }
  auto q = parse_uint(body);
  auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("parse_field: " + std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldOrder) throw std::length_error("parse_field: field order exceeds 2^20");
  return make_field(static_cast<std::uint32_t>(pp->p), pp->d);
}

std::uint32_t FiniteField::characteristic() const { return data_->p; }
std::uint32_t FiniteField::degree() const { return data_->d; }
std::uint32_t FiniteField::order() const { return data_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return data_->modulus; }

std::string FiniteField::modulus_string() const {
  std::string out;
  for (std::uint32_t i = data_->d + 1; i-- > 0;) {
    std::uint32_t c = data_->modulus[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string FiniteField::name() const {
  if (data_->d == 1) return "GF(" + std::to_string(data_->p) + ")";
  return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->d) + ")";
}

FieldElement FiniteField::element(std::uint32_t index) const {
  if (index >= data_->q) throw std::out_of_range("FiniteField::element: index out of range");
  return FieldElement(data_, index);
}

FieldElement FiniteField::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != data_->d) throw std::invalid_argument("from_coefficients: expected " + std::to_string(data_->d) + " coefficients");
  for (auto c : coeffs) {
    if (c >= data_->p) throw std::invalid_argument("from_coefficients: coefficient out of range");
  }
  return FieldElement(data_, data_->encode(coeffs));
}

FieldElement FiniteField::zero() const { return FieldElement(data_, 0); }
FieldElement FiniteField::one() const { return FieldElement(data_, 1); }

FieldElement FiniteField::primitive_element() const {
  if (data_->q == 2) return one();
  for (std::uint32_t i = 1; i < data_->q; ++i) {
    if (order_of(*data_, i) == data_->q - 1) return FieldElement(data_, i);
  }
  throw std::logic_error("primitive_element: none found");
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  return a.data_->p == b.data_->p && a.data_->d == b.data_->d;
}

bool FieldElement::same_field(const FieldElement& other) const {
  return field_ == other.field_ || (field_->p == other.field_->p && field_->d == other.field_->d);
}

const detail::FieldData& FieldElement::checked_peer(const FieldElement& other) const {
  if (!same_field(other)) throw std::invalid_argument("field arithmetic: operands from different fields");
  return *field_;
}

std::vector<std::uint32_t> FieldElement::coefficients() const { return field_->decode(index_); }
FiniteField FieldElement::field() const { return FiniteField(field_); }

FieldElement FieldElement::operator+(const FieldElement& other) const {
  return FieldElement(field_, checked_peer(other).add(index_, other.index_));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  const auto& f = checked_peer(other);
  return FieldElement(field_, f.add(index_, f.neg(other.index_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(index_)); }

FieldElement FieldElement::operator*(const FieldElement& other) const {
  return FieldElement(field_, checked_peer(other).mul(index_, other.index_));
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
  checked_peer(other);
  return *this * other.inverse();
}

FieldElement FieldElement::inverse() const {
  if (index_ == 0) throw std::domain_error("FieldElement::inverse: zero is not invertible");
  return FieldElement(field_, field_->pow(index_, field_->q - 2));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  if (index_ == 0) return FieldElement(field_, exponent == 0 ? 1 : 0);
  return FieldElement(field_, field_->pow(index_, exponent));
}

FieldElement FieldElement::frobenius() const { return FieldElement(field_, field_->pow(index_, field_->p)); }

bool FieldElement::is_square() const {
  if (index_ == 0 || field_->p == 2) return true;
  return field_->pow(index_, (field_->q - 1) / 2) == 1;
}

std::uint64_t element_order(const FieldElement& a) {
  if (a.is_zero()) throw std::domain_error("element_order: zero has no multiplicative order");
  const std::uint64_t q = a.field().order();
  std::uint64_t order = q - 1;
  const Factorization factors(q - 1);
  for (auto [prime, exp] : factors.exponents()) {
    for (std::uint32_t i = 0; i < exp && a.pow(order / prime).is_one(); ++i) order /= prime;
  }
  return order;
}

FieldElement primitive_sixth_root(const FiniteField& field) {
  if ((field.order() - 1) % 6 != 0) {
    throw std::domain_error("primitive_sixth_root: 6 does not divide q-1 for " + field.name());
  }
  for (std::uint32_t i = 1; i < field.order(); ++i) {
    auto e = field.element(i);
    if (element_order(e) == 6) return e;
  }
  throw std::logic_error("primitive_sixth_root: none found");
}

}  // namespace sqs
