#pragma once

#include <random>
#include <vector>

#include "degp/arith/poly.hpp"

namespace degp::arith {

struct Factor {
  Poly poly;  // monic
  int multiplicity = 1;
  bool operator==(const Factor&) const = default;
};

/// f = lc(f) * prod g_i^{m_i} with g_i squarefree, pairwise coprime, monic.
std::vector<Factor> squarefree_factorization(const Poly& f);

/// For monic squarefree f: pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f);

/// Splits monic squarefree f, all of whose irreducible factors have degree d.
std::vector<Poly> equal_degree_factorization(const Poly& f, int d, std::mt19937_64& rng);

/// Complete factorization into monic irreducibles, sorted by (degree, coefficients).
std::vector<Factor> factor(const Poly& f);

/// Distinct roots of f in the extension `target` of its coefficient field, sorted.
std::vector<Fq> roots_in(const Poly& f, FieldRef target);

}  // namespace degp::arith
