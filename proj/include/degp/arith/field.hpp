#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace degp::arith {

class ArithError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Descriptor of F_{p^n}, realized as F_p[x]/(C) with C the Conway polynomial.
/// Descriptors are interned: field_make(p, n) always returns the same pointer,
/// so pointer equality is field equality.
class Field {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint64_t order() const { return q_; }
  /// Monic modulus, little-endian, size degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

 private:
  friend const Field* field_make(std::uint32_t, std::uint32_t);
  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
};

using FieldRef = const Field*;

/// Throws ArithError for non-prime p, n = 0, or fields too large to handle.
FieldRef field_make(std::uint32_t p, std::uint32_t n);

/// Conway polynomial C_{p,n}, little-endian, monic.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t n);

class Fq {
 public:
  Fq() = default;
  explicit Fq(FieldRef field);  // zero

  static Fq from_int(FieldRef field, std::int64_t v);
  static Fq generator(FieldRef field);
  static Fq from_coeffs(FieldRef field, std::vector<std::uint32_t> coeffs);

  FieldRef field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  /// True iff the element lies in the prime field.
  bool in_prime_field() const;
  /// Value in [0, p) of an element of the prime field.
  std::uint32_t prime_value() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq operator-() const;
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }

  Fq inv() const;
  Fq pow(std::uint64_t e) const;
  /// x -> x^{p^k}
  Fq frobenius(std::uint64_t k = 1) const;
  /// Smallest d >= 1 with x^{p^d} = x.
  std::uint32_t frobenius_orbit_length() const;

  bool operator==(const Fq& o) const { return field_ == o.field_ && c_ == o.c_; }
  /// Lexicographic on the coefficient vector read from the top degree down.
  std::strong_ordering operator<=>(const Fq& o) const;

  std::string to_string() const;

 private:
  void check_same(const Fq& o) const;

  FieldRef field_ = nullptr;
  std::vector<std::uint32_t> c_;
};

/// Image of x under the standard embedding F_{p^a} -> F_{p^b} (requires a | b).
Fq embed(const Fq& x, FieldRef target);

/// Preimage of x under the standard embedding of `target` into x's field, if x lies in the image.
std::optional<Fq> descend(const Fq& x, FieldRef target);

/// Degree over F_p of the smallest subfield containing x.
std::uint32_t definition_degree(const Fq& x);

/// Every element of a (small) field, in increasing order.
std::vector<Fq> all_elements(FieldRef field);

}  // namespace degp::arith
