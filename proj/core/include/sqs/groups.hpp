#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sqs/field.hpp"
#include "sqs/perm.hpp"

namespace sqs {

/// Points of GF(q) ∪ {∞}: index 0 is ∞, index 1 + i is the field element
/// with enumeration index i.
class ProjectiveLine {
 public:
  explicit ProjectiveLine(FiniteField field) : field_(std::move(field)) {}

  static constexpr Point infinity() { return 0; }
  std::size_t size() const { return field_.order() + 1; }
  const FiniteField& field() const { return field_; }

  Point point_of(const FieldElement& x) const { return x.index() + 1; }
  /// nullopt for ∞.
  std::optional<FieldElement> element_at(Point p) const;

  /// x -> (a x + b) / (c x + d); ad - bc must be nonzero.
  Permutation mobius(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                     const FieldElement& d) const;
  /// x -> x^p, fixing ∞.
  Permutation frobenius() const;

 private:
  FiniteField field_;
};

// Affine groups act on vectors of GF(p)^d (or field elements of GF(q)),
// labeled by their enumeration index.

/// AGL(d, p), p prime: translations along basis vectors plus generators of
/// GL(d, p). agl(1, p) == agl1(p).
PermGroup agl(std::uint32_t d, std::uint32_t p);
/// x -> a x + b, a != 0.
PermGroup agl1(std::uint32_t q);
/// agl1(q) extended by x -> x^p.
PermGroup a_gamma_l1(std::uint32_t q);

// Projective groups on ProjectiveLine labels. q >= 4.
PermGroup psl2(std::uint32_t q);
PermGroup pgl2(std::uint32_t q);
PermGroup psigmal2(std::uint32_t q);
PermGroup pgammal2(std::uint32_t q);

/// 2^4 : A_7 inside AGL(4, 2) on 16 points (order 40320).
PermGroup a7_16();

/// Column-packed 4x4 matrices over GF(2): bits 4i..4i+3 hold the image of e_i.
struct A7LinearGenerators {
  std::uint16_t order7 = 0;
  std::uint16_t order5 = 0;
};
/// The first (order-7, order-5) pair in ascending matrix-code order that
/// generates a group of order 2520 with the element orders of A_7.
A7LinearGenerators a7_linear_generators();
/// The linear map of a packed GF(2)^{4x4} matrix as a permutation of 16 vectors.
/// Throws std::invalid_argument for singular matrices.
Permutation gf2_linear_permutation(std::uint16_t code);

/// x -> a^2 x + b on GF(q), q odd.
PermGroup netto_group(std::uint32_t q);

PermGroup symmetric_group(std::size_t n);

enum class GroupFamily { AGL, AGammaL1, PSL2, PGL2, PSigmaL2, PGammaL2, A7_16, Netto, Symmetric };

struct GroupSpec {
  GroupFamily family = GroupFamily::AGL;
  std::uint32_t d = 1;  // dimension for AGL, otherwise unused
  std::uint32_t q = 0;  // field order / degree for Sym

  std::string to_string() const;
};

/// Accepts "AGL(3,2)", "AGL(1,8)", "AGammaL(1,32)", "PSL(2,7)", "PGL(2,9)",
/// "PSigmaL(2,9)", "PGammaL(2,9)", "A7_16", "Netto(19)", "Sym(6)"; Greek
/// spellings (AΓL, PΣL, PΓL) are accepted too. Throws std::invalid_argument.
GroupSpec parse_group_spec(std::string_view spec);
PermGroup build_group(const GroupSpec& spec);

}  // namespace sqs
