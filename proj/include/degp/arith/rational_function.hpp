#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degp/arith/place.hpp"
#include "degp/arith/poly.hpp"

namespace degp::arith {

/// num/den in lowest terms with monic den.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(FieldRef field);  // zero
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(Poly num);

  static RationalFunction constant(const Fq& c);
  /// t (the coordinate).
  static RationalFunction t(FieldRef field);
  /// 1/(t - a)^k, or t^k when a is the place at infinity.
  static RationalFunction pole_at(const Place& z, FieldRef field, int k);

  FieldRef field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(int e) const;
  RationalFunction derivative() const;
  RationalFunction embedded(FieldRef target) const;
  /// Apply x -> x^{p^k} to every coefficient.
  RationalFunction frobenius_coeffs(std::uint64_t k) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string(const std::string& var = "t") const;

 private:
  Poly num_;
  Poly den_;
};

/// Degree over F_p of the smallest field containing every coefficient.
std::uint32_t definition_degree(const RationalFunction& f);
/// The same function over `target`; throws if some coefficient does not lie in it.
RationalFunction change_field(const RationalFunction& f, FieldRef target);
/// The same function over its smallest field of definition.
RationalFunction minimal_model(const RationalFunction& f);

/// Valuation at z; throws on the zero function.
int order_at(const RationalFunction& f, const Place& z);

/// Multiplicity of a as a root of f (a may live in an extension of f's field).
int root_multiplicity(const Poly& f, const Fq& a);

/// Finite zeros over the algebraic closure, sorted by place. Sum of orders = deg(num).
std::vector<std::pair<Place, int>> zeros_with_multiplicity(const RationalFunction& f);
/// Finite poles (as positive pole orders), sorted by place.
std::vector<std::pair<Place, int>> poles_with_multiplicity(const RationalFunction& f);
/// Every place with nonzero order, including infinity, sorted by place.
std::vector<std::pair<Place, int>> divisor(const RationalFunction& f);

}  // namespace degp::arith
