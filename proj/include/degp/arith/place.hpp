#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "degp/arith/field.hpp"
#include "degp/arith/poly.hpp"

namespace degp::arith {

/// A geometric point of the projective line over the algebraic closure of F_p.
///
/// A finite place is a monic irreducible polynomial P over F_p plus a root index i.
/// Writing a0 for the smallest root of P inside the standard F_{p^d} (d = deg P),
/// the place is the point a0^{p^i}. Equal places have equal (P, i).
class Place {
 public:
  Place() = default;  // infinity
  static Place infinity() { return Place(); }
  static Place from_element(const Fq& a);
  /// Throws ArithError if minpoly is not monic irreducible over F_p or index >= degree.
  static Place make(std::uint32_t p, std::vector<std::uint32_t> minpoly, std::uint32_t index);

  bool is_infinity() const { return minpoly_.empty(); }
  std::uint32_t p() const { return p_; }
  /// Degree of the residue field over F_p (1 for infinity).
  std::uint32_t degree() const { return is_infinity() ? 1 : static_cast<std::uint32_t>(minpoly_.size() - 1); }
  const std::vector<std::uint32_t>& minpoly() const { return minpoly_; }
  std::uint32_t index() const { return index_; }

  /// The coordinate of the point inside F (degree() must divide F's degree).
  Fq root_in(FieldRef F) const;
  /// Image under x -> x^{p^k}.
  Place frobenius(std::uint64_t k) const;

  bool operator==(const Place& o) const = default;
  /// Finite places sorted by (degree, minpoly from the top, index); infinity last.
  std::strong_ordering operator<=>(const Place& o) const;

  std::string to_string() const;

 private:
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> minpoly_;  // little-endian monic, empty for infinity
  std::uint32_t index_ = 0;
};

/// Smallest root of the irreducible minpoly inside the standard F_{p^d}.
Fq canonical_root(std::uint32_t p, const std::vector<std::uint32_t>& minpoly);

}  // namespace degp::arith
