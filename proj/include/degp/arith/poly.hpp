#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "degp/arith/field.hpp"

namespace degp::arith {

/// Dense univariate polynomial over a finite field, little-endian, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldRef field) : field_(field) {}
  Poly(FieldRef field, std::vector<Fq> coeffs);

  static Poly constant(const Fq& c);
  static Poly monomial(const Fq& c, std::size_t deg);
  static Poly x(FieldRef field);
  static Poly from_ints(FieldRef field, const std::vector<std::int64_t>& coeffs);

  FieldRef field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Fq>& coeffs() const { return c_; }
  Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq(field_); }
  Fq lead() const { return c_.empty() ? Fq(field_) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  Poly monic() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Fq& s) const;
  /// (quotient, remainder); throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly derivative() const;
  Fq eval(const Fq& a) const;
  Poly map_coeffs(const std::function<Fq(const Fq&)>& f, FieldRef target) const;
  Poly embedded(FieldRef target) const;

  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Degree first, then coefficients from the top.
  std::strong_ordering operator<=>(const Poly& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  FieldRef field_ = nullptr;
  std::vector<Fq> c_;
};

Poly gcd(Poly a, Poly b);  // monic (or zero)
/// Returns (g, u, v) with u*a + v*b = g = gcd(a, b) monic.
std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);
Poly pow(const Poly& a, std::uint64_t e);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly base, std::uint64_t e, const Poly& m);
/// base^{q^k} mod m, where q is the order of the coefficient field.
Poly frobmod(Poly base, std::uint64_t k, const Poly& m);

}  // namespace degp::arith
