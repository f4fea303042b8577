#include "degp/arith/rational_function.hpp"

#include <algorithm>
#include <map>

#include "degp/arith/factor.hpp"
#include "degp/arith/numtheory.hpp"

namespace degp::arith {

namespace {

Poly one(FieldRef f) { return Poly::constant(Fq::from_int(f, 1)); }

std::vector<std::pair<Place, int>> finite_zeros(const Poly& g) {
  std::map<Place, int> acc;
  FieldRef F = g.field();
  for (const auto& [irr, mult] : factor(g)) {
    FieldRef E = field_make(F->p(), F->degree() * static_cast<std::uint32_t>(irr.degree()));
    for (const auto& a : roots_in(irr, E)) acc[Place::from_element(a)] += mult;
  }
  return {acc.begin(), acc.end()};
}

}  // namespace

RationalFunction::RationalFunction(FieldRef field) : num_(field), den_(one(field)) {}

RationalFunction::RationalFunction(Poly num) : RationalFunction(num, one(num.field())) {}

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw ArithError("rational function with zero denominator");
  if (num.field() != den.field()) throw ArithError("rational function field mismatch");
  if (num.is_zero()) {
    num_ = Poly(num.field());
    den_ = one(num.field());
    return;
  }
  Poly g = gcd(num, den);
  num = num / g;
  den = den / g;
  Fq lc = den.lead().inv();
  num_ = num.scaled(lc);
  den_ = den.scaled(lc);
}

RationalFunction RationalFunction::constant(const Fq& c) { return RationalFunction(Poly::constant(c)); }

RationalFunction RationalFunction::t(FieldRef field) { return RationalFunction(Poly::x(field)); }

RationalFunction RationalFunction::pole_at(const Place& z, FieldRef field, int k) {
  if (z.is_infinity()) return RationalFunction(arith::pow(Poly::x(field), static_cast<std::uint64_t>(k)));
  Fq a = z.root_in(field);
  Poly lin(field, {-a, Fq::from_int(field, 1)});
  return RationalFunction(one(field), arith::pow(lin, static_cast<std::uint64_t>(k)));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -num_;
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw ArithError("division by the zero function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(one(field())) / pow(-e);
  return RationalFunction(arith::pow(num_, static_cast<std::uint64_t>(e)), arith::pow(den_, static_cast<std::uint64_t>(e)));
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::embedded(FieldRef target) const {
  return RationalFunction(num_.embedded(target), den_.embedded(target));
}

RationalFunction RationalFunction::frobenius_coeffs(std::uint64_t k) const {
  auto frob = [k](const Fq& c) { return c.frobenius(k); };
  return RationalFunction(num_.map_coeffs(frob, field()), den_.map_coeffs(frob, field()));
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::uint32_t definition_degree(const RationalFunction& f) {
  std::uint32_t d = 1;
  for (const Poly* g : {&f.num(), &f.den()})
    for (const auto& c : g->coeffs()) d = lcm_u32(d, definition_degree(c));
  return d;
}

RationalFunction change_field(const RationalFunction& f, FieldRef target) {
  FieldRef F = f.field();
  if (F == target) return f;
  if (F->p() != target->p()) throw ArithError("cannot change characteristic of a rational function");
  FieldRef common = field_make(F->p(), lcm_u32(F->degree(), target->degree()));
  auto down = [&](const Fq& c) {
    auto y = descend(embed(c, common), target);
    if (!y) throw ArithError("coefficient " + c.to_string() + " is not defined over F_" + std::to_string(target->order()));
    return *y;
  };
  return RationalFunction(f.num().map_coeffs(down, target), f.den().map_coeffs(down, target));
}

RationalFunction minimal_model(const RationalFunction& f) {
  return change_field(f, field_make(f.field()->p(), definition_degree(f)));
}

int root_multiplicity(const Poly& f, const Fq& a) {
  Poly g = f.embedded(a.field());
  Poly lin(a.field(), {-a, Fq::from_int(a.field(), 1)});
  int k = 0;
  while (!g.is_zero()) {
    auto [q, r] = g.divmod(lin);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++k;
  }
  return k;
}

int order_at(const RationalFunction& f, const Place& z) {
  if (f.is_zero()) throw ArithError("order of the zero function");
  if (z.is_infinity()) return f.den().degree() - f.num().degree();
  FieldRef F = f.field();
  if (z.p() != F->p()) throw ArithError("place and function have different characteristic");
  FieldRef E = field_make(F->p(), lcm_u32(F->degree(), z.degree()));
  Fq a = z.root_in(E);
  return root_multiplicity(f.num(), a) - root_multiplicity(f.den(), a);
}

std::vector<std::pair<Place, int>> zeros_with_multiplicity(const RationalFunction& f) {
  if (f.is_zero()) throw ArithError("zeros of the zero function");
  return finite_zeros(f.num());
}

std::vector<std::pair<Place, int>> poles_with_multiplicity(const RationalFunction& f) {
  if (f.is_zero()) throw ArithError("poles of the zero function");
  return finite_zeros(f.den());
}

std::vector<std::pair<Place, int>> divisor(const RationalFunction& f) {
  std::vector<std::pair<Place, int>> out = zeros_with_multiplicity(f);
  for (auto& [z, k] : poles_with_multiplicity(f)) out.emplace_back(z, -k);
  if (int o = order_at(f, Place::infinity()); o != 0) out.emplace_back(Place::infinity(), o);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace degp::arith
