#include "degp/torsor/torsor.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "degp/arith/factor.hpp"
#include "degp/arith/numtheory.hpp"

namespace degp::torsor {

using arith::FieldRef;
using arith::Fq;
using arith::Poly;

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Etale: return "etale";
    case GroupKind::Mult: return "mult";
    case GroupKind::Add: return "add";
  }
  return "?";
}

std::optional<GroupKind> parse_kind(std::string_view s) {
  if (s == "etale") return GroupKind::Etale;
  if (s == "mult") return GroupKind::Mult;
  if (s == "add") return GroupKind::Add;
  return std::nullopt;
}

std::optional<std::string> boundary_type_problem(const BoundaryType& b, int p) {
  if (b.h < 0 || b.h >= p) return "residue h=" + std::to_string(b.h) + " is not in [0," + std::to_string(p) + ")";
  if (b.m != 0 && std::gcd(b.m, p) != 1) return "conductor m=" + std::to_string(b.m) + " is divisible by p";
  if (b.h != 0 && !(b.kind == GroupKind::Mult && b.m == 0))
    return "residue h=" + std::to_string(b.h) + " is only allowed for mult with m=0";
  return std::nullopt;
}

namespace {

struct PrincipalPart {
  Poly pi;                  // monic irreducible
  std::vector<Poly> digit;  // digit[j] multiplies pi^{-j}; digit[0] unused
};

struct PartialFractions {
  Poly poly;
  std::vector<PrincipalPart> parts;
};

PartialFractions partial_fractions(const RationalFunction& g) {
  FieldRef F = g.field();
  PartialFractions out;
  auto [q, r] = g.num().divmod(g.den());
  out.poly = q;
  for (const auto& [pi, k] : arith::factor(g.den())) {
    Poly pik = arith::pow(pi, static_cast<std::uint64_t>(k));
    Poly rest = g.den() / pik;
    auto [one, u, v] = arith::xgcd(rest, pik);
    (void)v;
    Poly a = (r * u) % pik;  // r / den = a / pi^k + (something) / rest
    PrincipalPart part{pi, std::vector<Poly>(k + 1, Poly(F))};
    for (int i = 0; i < k; ++i) {
      auto [qq, rr] = a.divmod(pi);
      part.digit[k - i] = rr;
      a = qq;
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

// Unique E with deg E < deg pi and E^p = D mod pi.
Poly pth_root_mod(const Poly& D, const Poly& pi) {
  FieldRef F = D.field();
  const std::uint64_t steps = std::uint64_t{F->degree()} * static_cast<std::uint64_t>(pi.degree()) - 1;
  Poly e = D % pi;
  for (std::uint64_t i = 0; i < steps; ++i) e = arith::powmod(e, F->p(), pi);
  return e;
}

// Reduce modulo a^p (additive) or a^p - a (Artin-Schreier).
std::optional<RationalFunction> digit_reduce(RationalFunction g, bool artin_schreier) {
  if (g.is_zero()) return std::nullopt;
  FieldRef F = g.field();
  const int p = static_cast<int>(F->p());
  auto subtract = [&](const RationalFunction& a) {
    RationalFunction ap = a.pow(p);
    g = artin_schreier ? g - (ap - a) : g - ap;
  };
  for (;;) {
    if (g.is_zero()) return std::nullopt;
    auto pf = partial_fractions(g);
    const PrincipalPart* best = nullptr;
    int best_j = 0;
    for (const auto& part : pf.parts)
      for (int j = static_cast<int>(part.digit.size()) - 1; j >= p; --j)
        if (j % p == 0 && !part.digit[j].is_zero()) {
          if (j > best_j) {
            best = &part;
            best_j = j;
          }
          break;
        }
    if (!best) break;
    Poly E = pth_root_mod(best->digit[best_j], best->pi);
    subtract(RationalFunction(E, arith::pow(best->pi, static_cast<std::uint64_t>(best_j / p))));
  }
  for (;;) {
    if (g.is_zero()) return std::nullopt;
    Poly poly = g.num() / g.den();
    int top = -1;
    for (int k = poly.degree(); k >= p; --k)
      if (k % p == 0 && !poly.coeff(k).is_zero()) {
        top = k;
        break;
      }
    if (top < 0) break;
    Fq root = poly.coeff(top).frobenius(F->degree() - 1);
    subtract(RationalFunction(Poly::monomial(root, static_cast<std::size_t>(top / p))));
  }
  if (g.is_zero()) return std::nullopt;
  Poly poly = g.num() / g.den();
  if (!poly.coeff(0).is_zero()) g = g - RationalFunction::constant(poly.coeff(0));
  if (g.is_zero()) return std::nullopt;
  return g;
}

Poly one(FieldRef F) { return Poly::constant(Fq::from_int(F, 1)); }

}  // namespace

std::optional<RationalFunction> as_reduce(const RationalFunction& g) { return digit_reduce(g, true); }

std::optional<RationalFunction> additive_reduce(const RationalFunction& g) { return digit_reduce(g, false); }

std::optional<RationalFunction> kummer_reduce(const RationalFunction& f) {
  if (f.is_zero()) throw TorsorError("Kummer representative must be nonzero");
  FieldRef F = f.field();
  const int p = static_cast<int>(F->p());
  Poly out = one(F);
  for (int sign : {1, -1}) {
    for (const auto& [pi, k] : arith::factor(sign > 0 ? f.num() : f.den())) {
      int e = static_cast<int>(arith::mod_floor(sign * k, p));
      if (e) out = out * arith::pow(pi, static_cast<std::uint64_t>(e));
    }
  }
  if (out.degree() == 0) return std::nullopt;
  return RationalFunction(out);
}

TorsorRep TorsorRep::make(GroupKind kind, const RationalFunction& rep, std::vector<Place> punctures) {
  if (rep.is_zero() && kind == GroupKind::Mult) throw TorsorError("Kummer representative must be nonzero");
  // Reducing over the smallest field of definition keeps the canonical form independent
  // of the field the caller happened to write the coefficients in.
  const RationalFunction base = rep.is_zero() ? rep : arith::minimal_model(rep);
  std::optional<RationalFunction> reduced;
  switch (kind) {
    case GroupKind::Etale: reduced = as_reduce(base); break;
    case GroupKind::Mult: reduced = kummer_reduce(base); break;
    case GroupKind::Add: reduced = additive_reduce(base); break;
  }
  if (!reduced) throw SplitTorsor(std::string(kind_name(kind)) + " representative " + rep.to_string() + " defines the trivial class");
  TorsorRep T;
  T.kind_ = kind;
  T.rep_ = arith::minimal_model(*reduced);
  std::sort(punctures.begin(), punctures.end());
  punctures.erase(std::unique(punctures.begin(), punctures.end()), punctures.end());
  for (const auto& z : punctures)
    if (!z.is_infinity() && z.p() != rep.field()->p()) throw TorsorError("puncture " + z.to_string() + " has the wrong characteristic");
  T.punctures_ = std::move(punctures);
  return T;
}

RationalFunction omega(const TorsorRep& T) {
  const RationalFunction& f = T.rep();
  RationalFunction w = T.kind() == GroupKind::Mult ? f.derivative() / f : f.derivative();
  if (w.is_zero()) throw TorsorError("representative " + f.to_string() + " is a p-th power: omega vanishes");
  return w;
}

int differential_order_at(const RationalFunction& R, const Place& z) {
  return arith::order_at(R, z) - (z.is_infinity() ? 2 : 0);
}

std::vector<std::pair<Place, int>> differential_divisor(const RationalFunction& R) {
  std::vector<std::pair<Place, int>> out;
  for (auto& [z, k] : arith::divisor(R))
    if (!z.is_infinity()) out.emplace_back(z, k);
  if (int k = differential_order_at(R, Place::infinity()); k != 0) out.emplace_back(Place::infinity(), k);
  return out;
}

Label conductor_residue_at(const TorsorRep& T, const Place& z) {
  const int p = static_cast<int>(T.rep().field()->p());
  if (T.kind() == GroupKind::Etale) return {std::max(0, -arith::order_at(T.rep(), z)), 0};
  const int m = -differential_order_at(omega(T), z) - 1;
  const int h = T.kind() == GroupKind::Mult ? static_cast<int>(arith::mod_floor(arith::order_at(T.rep(), z), p)) : 0;
  return {m, h};
}

std::vector<Place> special_support(const TorsorRep& T) {
  std::vector<Place> out;
  if (T.kind() == GroupKind::Etale) {
    for (auto& [z, k] : arith::poles_with_multiplicity(T.rep())) out.push_back(z);
    if (arith::order_at(T.rep(), Place::infinity()) < 0) out.push_back(Place::infinity());
  } else {
    for (auto& [z, k] : differential_divisor(omega(T))) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Place> critical_points(const TorsorRep& T) {
  std::vector<Place> out;
  if (!is_radicial(T.kind())) return out;
  for (auto& [z, k] : differential_divisor(omega(T)))
    if (k > 0) out.push_back(z);
  return out;
}

std::vector<Place> admissibility_violations(const TorsorRep& T, const std::vector<Place>& special) {
  std::set<Place> allowed(special.begin(), special.end());
  std::vector<Place> out;
  for (const auto& z : special_support(T))
    if (!allowed.count(z)) out.push_back(z);
  return out;
}

bool is_admissible(const TorsorRep& T, const std::vector<Place>& special) {
  return admissibility_violations(T, special).empty();
}

TorsorRep galois_apply(const GaloisElement& sigma, const TorsorRep& T) {
  const std::uint64_t k = sigma.absolute_power();
  std::vector<Place> moved;
  for (const auto& z : T.punctures()) moved.push_back(z.frobenius(k));
  return TorsorRep::make(T.kind(), T.rep().frobenius_coeffs(k), std::move(moved));
}

}  // namespace degp::torsor
