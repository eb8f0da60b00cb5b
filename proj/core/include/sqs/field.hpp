#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqs {

namespace detail {
struct FieldData;
}

class FieldElement;

/// The finite field GF(p^d), represented as Z_p[x] modulo a fixed monic
/// irreducible polynomial of degree d.
///
/// Elements are enumerated 0..q-1 by reading their coefficient vector
/// (constant term first) as a base-p integer, so 0 and 1 sit at indexes 0
/// and 1, and the prime subfield occupies indexes 0..p-1.
class FiniteField {
 public:
  /// Builds GF(p^d) with the smallest monic irreducible modulus in the
  /// integer encoding of its lower coefficients.
  ///
  /// Throws std::invalid_argument for a non-prime p or d == 0 and
  /// std::length_error when p^d exceeds 2^20.
  static FiniteField make(std::uint32_t p, std::uint32_t d);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  /// Modulus coefficients, constant term first; length degree()+1, monic.
  const std::vector<std::uint32_t>& modulus() const;
  std::string modulus_string() const;
  /// "GF(p^d)" or "GF(p)" for prime fields.
  std::string name() const;

  FieldElement element(std::uint32_t index) const;
  FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// Element of multiplicative order q-1 with the smallest index.
  FieldElement primitive_element() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldData> data);
  std::shared_ptr<const detail::FieldData> data_;
  friend class FieldElement;
};

FiniteField make_field(std::uint32_t p, std::uint32_t d);

/// Parses "GF(q)" or "GF(p^d)"; q must be a prime power.
FiniteField parse_field(std::string_view spec);

class FieldElement {
 public:
  std::uint32_t index() const { return index_; }
  std::vector<std::uint32_t> coefficients() const;
  FiniteField field() const;

  bool is_zero() const { return index_ == 0; }
  bool is_one() const { return index_ == 1; }

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator/(const FieldElement& other) const;

  /// Throws std::domain_error for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;
  /// x -> x^p.
  FieldElement frobenius() const;
  /// 0 counts as a square.
  bool is_square() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.index_ == b.index_ && a.same_field(b);
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.index_ <=> b.index_;
  }

 private:
  FieldElement(std::shared_ptr<const detail::FieldData> field, std::uint32_t index)
      : field_(std::move(field)), index_(index) {}
  bool same_field(const FieldElement& other) const;
  const detail::FieldData& checked_peer(const FieldElement& other) const;

  std::shared_ptr<const detail::FieldData> field_;
  std::uint32_t index_ = 0;
  friend class FiniteField;
};

/// Least n >= 1 with a^n = 1. Throws std::domain_error for zero.
std::uint64_t element_order(const FieldElement& a);

/// The order-6 element with the smallest index. Throws std::domain_error
/// unless 6 divides q-1.
FieldElement primitive_sixth_root(const FiniteField& field);

}  // namespace sqs
