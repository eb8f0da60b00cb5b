#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "sqs/designs.hpp"
#include "sqs/perm.hpp"

namespace sqs {

/// Points and planes of AG(d,2): 4-subsets of GF(2)^d with zero XOR. 3 <= d <= 6.
Design boolean_sqs(std::uint32_t d);
/// Orbit of {∞,0,1,2} under PGL(2,3^d) on the projective line. 1 <= d <= 4.
Design pgl_sqs(std::uint32_t d);
/// Orbit of {∞,0,1,ε} under PSL(2,q), ε the primitive sixth root of unity
/// with the smallest index. q ≡ 7 (mod 12), q <= 1000.
Design netto_sqs(std::uint32_t q);
/// Orbit of {0,1,ε} under the Netto group x -> a^2 x + b. q ≡ 7 (mod 12).
Design netto_triples(std::uint32_t q);
/// Lines of AG(d,3) on the field labels of GF(3^d). 1 <= d <= 3.
Design ag3_lines(std::uint32_t d);

/// Sorted orbit of a block under G, as a design on G's points.
Design orbit_design(const PermGroup& g, std::span<const Point> base_block);

enum class ConstructionKind { Boolean, Pgl, Netto, NettoTriples, Ag3Lines };

struct ConstructionTag {
  ConstructionKind kind = ConstructionKind::Boolean;
  std::uint32_t parameter = 0;

  std::string to_string() const;  // "boolean:3", "netto:19", ...
};

/// Parses "boolean:d", "pgl:d", "netto:q", "netto3:q", "ag3lines:d".
/// Throws std::invalid_argument.
ConstructionTag parse_construction(std::string_view name);
Design construct(const ConstructionTag& tag);

}  // namespace sqs
