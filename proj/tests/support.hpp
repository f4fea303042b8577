#pragma once

#include <random>
#include <vector>

#include "degp/arith/rational_function.hpp"

namespace testsupport {

using namespace degp::arith;

inline Poly P(FieldRef F, std::vector<std::int64_t> c) { return Poly::from_ints(F, c); }

inline Fq random_element(FieldRef F, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, F->p() - 1);
  std::vector<std::uint32_t> c(F->degree());
  for (auto& x : c) x = d(rng);
  return Fq::from_coeffs(F, c);
}

inline Fq random_nonzero(FieldRef F, std::mt19937_64& rng) {
  for (;;) {
    Fq a = random_element(F, rng);
    if (!a.is_zero()) return a;
  }
}

inline Poly random_poly(FieldRef F, int deg, std::mt19937_64& rng) {
  std::vector<Fq> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_element(F, rng));
  return Poly(F, c);
}

inline Poly random_monic(FieldRef F, int deg, std::mt19937_64& rng) {
  std::vector<Fq> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_element(F, rng));
  c.push_back(Fq::from_int(F, 1));
  return Poly(F, c);
}

inline RationalFunction random_function(FieldRef F, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, max_deg);
  for (;;) {
    Poly num = random_poly(F, d(rng), rng);
    Poly den = random_monic(F, d(rng), rng);
    if (!num.is_zero()) return RationalFunction(num, den);
  }
}

}  // namespace testsupport
