#include "degp/arith/factor.hpp"

#include <algorithm>
#include <map>

namespace degp::arith {

namespace {

Poly one(FieldRef f) { return Poly::constant(Fq::from_int(f, 1)); }

// g(t)^{1/p}; requires g' = 0.
Poly pth_root(const Poly& g) {
  FieldRef F = g.field();
  const std::uint32_t p = F->p();
  std::vector<Fq> out;
  for (int i = 0; i <= g.degree(); i += static_cast<int>(p))
    out.push_back(g.coeff(i).frobenius(F->degree() - 1));
  return Poly(F, std::move(out));
}

Poly random_poly(FieldRef F, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, F->p() - 1);
  std::vector<Fq> c;
  for (int i = 0; i < below_degree; ++i) {
    std::vector<std::uint32_t> v(F->degree());
    for (auto& x : v) x = coeff(rng);
    c.push_back(Fq::from_coeffs(F, std::move(v)));
  }
  return Poly(F, std::move(c));
}

// A polynomial whose gcd with f splits f with probability about 1/2.
Poly splitting_candidate(const Poly& a, const Poly& f, int d) {
  FieldRef F = f.field();
  if (F->p() == 2) {
    // absolute trace from F_{2^{nd}} to F_2
    const std::uint64_t steps = std::uint64_t{F->degree()} * d;
    Poly t = a % f, s = t;
    for (std::uint64_t i = 1; i < steps; ++i) {
      s = mulmod(s, s, f);
      t = t + s;
    }
    return t;
  }
  // a^{(q^d-1)/2} = (a^{1+q+...+q^{d-1}})^{(q-1)/2}
  Poly norm = a % f, conj = a % f;
  for (int i = 1; i < d; ++i) {
    conj = frobmod(conj, 1, f);
    norm = mulmod(norm, conj, f);
  }
  return powmod(norm, (F->order() - 1) / 2, f) - one(F);
}

}  // namespace

std::vector<Factor> squarefree_factorization(const Poly& f) {
  if (f.is_zero()) throw ArithError("squarefree factorization of zero");
  std::vector<Factor> out;
  if (f.degree() == 0) return out;
  FieldRef F = f.field();
  Poly g = f.monic();
  Poly c = gcd(g, g.derivative());
  Poly w = g / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [h, m] : squarefree_factorization(pth_root(c.monic())))
      out.push_back({h, m * static_cast<int>(F->p())});
  }
  return out;
}

std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& f_in) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = f_in.monic();
  FieldRef F = f.field();
  Poly x = Poly::x(F);
  Poly h = x % f;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = frobmod(h, 1, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f_in, int d, std::mt19937_64& rng) {
  Poly f = f_in.monic();
  if (f.degree() == d) return {f};
  if (f.degree() % d != 0) throw ArithError("equal-degree factorization: degree not divisible");
  FieldRef F = f.field();
  for (;;) {
    Poly a = random_poly(F, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Poly g = gcd(a, f);
    if (g.degree() <= 0 || g.degree() == f.degree()) g = gcd(splitting_candidate(a, f, d), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factorization(g, d, rng);
      auto right = equal_degree_factorization(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Factor> factor(const Poly& f) {
  std::mt19937_64 rng(0x5eedULL);
  std::map<Poly, int> acc;
  for (const auto& [sq, mult] : squarefree_factorization(f))
    for (const auto& [part, d] : distinct_degree_factorization(sq))
      for (auto& irr : equal_degree_factorization(part, d, rng)) acc[irr] += mult;
  std::vector<Factor> out;
  for (auto& [g, m] : acc) out.push_back({g, m});
  return out;
}

std::vector<Fq> roots_in(const Poly& f, FieldRef target) {
  if (f.is_zero()) throw ArithError("roots of the zero polynomial");
  Poly g = f.embedded(target);
  std::mt19937_64 rng(0x5eedULL);
  std::vector<Fq> roots;
  for (const auto& [sq, mult] : squarefree_factorization(g)) {
    (void)mult;
    for (const auto& [part, d] : distinct_degree_factorization(sq)) {
      if (d != 1) continue;
      for (auto& lin : equal_degree_factorization(part, 1, rng)) roots.push_back(-lin.coeff(0));
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace degp::arith
