#include "degp/arith/poly.hpp"

#include <sstream>

namespace degp::arith {

Poly::Poly(FieldRef field, std::vector<Fq> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw ArithError("polynomial coefficient lives in the wrong field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Fq& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Fq& c, std::size_t deg) {
  std::vector<Fq> v(deg + 1, Fq(c.field()));
  v[deg] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(FieldRef field) { return monomial(Fq::from_int(field, 1), 1); }

Poly Poly::from_ints(FieldRef field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Fq> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(Fq::from_int(field, c));
  return Poly(field, std::move(v));
}

Poly Poly::monic() const {
  if (c_.empty() || is_monic()) return *this;
  return scaled(lead().inv());
}

Poly Poly::operator+(const Poly& o) const {
  if (o.field_ != field_) throw ArithError("polynomial field mismatch");
  std::vector<Fq> r(std::max(c_.size(), o.c_.size()), Fq(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Fq> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (o.field_ != field_) throw ArithError("polynomial field mismatch");
  if (c_.empty() || o.c_.empty()) return Poly(field_);
  std::vector<Fq> r(c_.size() + o.c_.size() - 1, Fq(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(const Fq& s) const {
  std::vector<Fq> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * s);
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ArithError("polynomial division by zero");
  if (d.field_ != field_) throw ArithError("polynomial field mismatch");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<Fq> rem = c_;
  std::vector<Fq> quo(c_.size() - d.c_.size() + 1, Fq(field_));
  const Fq inv_lead = d.lead().inv();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    Fq c = rem[k] * inv_lead;
    quo[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d.c_[i];
  }
  rem.resize(dd);
  return {Poly(field_, std::move(quo)), Poly(field_, std::move(rem))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Fq> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Fq::from_int(field_, static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(r));
}

Fq Poly::eval(const Fq& a) const {
  Fq acc(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * a + c_[k];
  return acc;
}

Poly Poly::map_coeffs(const std::function<Fq(const Fq&)>& f, FieldRef target) const {
  std::vector<Fq> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(f(c));
  return Poly(target, std::move(r));
}

Poly Poly::embedded(FieldRef target) const {
  if (target == field_) return *this;
  return map_coeffs([target](const Fq& c) { return embed(c, target); }, target);
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = c_.size(); i-- > 0;)
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = c_[k].is_one();
    if (!unit || k == 0) os << (c_[k].in_prime_field() ? std::to_string(c_[k].prime_value()) : c_[k].to_string());
    if (k > 0) os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  FieldRef F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Fq::from_int(F, 1)), s1(F);
  Poly t0(F), t1 = Poly::constant(Fq::from_int(F, 1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Fq inv = r0.lead().inv();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly pow(const Poly& a, std::uint64_t e) {
  Poly r = Poly::constant(Fq::from_int(a.field(), 1));
  Poly b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(Fq::from_int(m.field(), 1)) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return r;
}

Poly frobmod(Poly base, std::uint64_t k, const Poly& m) {
  const std::uint64_t q = m.field()->order();
  for (std::uint64_t i = 0; i < k; ++i) base = powmod(base, q, m);
  return base % m;
}

}  // namespace degp::arith
