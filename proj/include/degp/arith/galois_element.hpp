#pragma once

#include <cstdint>
#include <string>

namespace degp::arith {

/// sigma = (x -> x^{q^e}) with q = p^base_degree: a power of the Frobenius of the base field.
struct GaloisElement {
  std::uint32_t base_degree = 1;
  std::uint64_t exponent = 0;

  static GaloisElement identity(std::uint32_t base_degree = 1) { return {base_degree, 0}; }
  static GaloisElement frobenius(std::uint32_t base_degree = 1) { return {base_degree, 1}; }

  /// Number of absolute Frobenius steps x -> x^p.
  std::uint64_t absolute_power() const { return std::uint64_t{base_degree} * exponent; }

  GaloisElement compose(const GaloisElement& o) const { return {base_degree, exponent + o.exponent}; }

  std::string to_string() const {
    return "Frob_{p^" + std::to_string(base_degree) + "}^" + std::to_string(exponent);
  }
};

}  // namespace degp::arith
