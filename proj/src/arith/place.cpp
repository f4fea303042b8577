#include "degp/arith/place.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "degp/arith/factor.hpp"
#include "degp/arith/numtheory.hpp"

namespace degp::arith {

Fq canonical_root(std::uint32_t p, const std::vector<std::uint32_t>& minpoly) {
  static std::mutex m;
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, Fq> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    if (auto it = cache.find({p, minpoly}); it != cache.end()) return it->second;
  }
  const auto d = static_cast<std::uint32_t>(minpoly.size() - 1);
  FieldRef Fp = field_make(p, 1);
  std::vector<std::int64_t> ints(minpoly.begin(), minpoly.end());
  auto roots = roots_in(Poly::from_ints(Fp, ints), field_make(p, d));
  if (roots.size() != d) throw ArithError("polynomial is not irreducible over F_" + std::to_string(p));
  std::lock_guard<std::mutex> lock(m);
  cache.emplace(std::make_pair(p, minpoly), roots.front());
  return roots.front();
}

Place Place::from_element(const Fq& a) {
  FieldRef F = a.field();
  const std::uint32_t d = a.frobenius_orbit_length();
  Poly mp = Poly::constant(Fq::from_int(F, 1));
  Fq conj = a;
  for (std::uint32_t i = 0; i < d; ++i) {
    mp = mp * Poly(F, {-conj, Fq::from_int(F, 1)});
    conj = conj.frobenius();
  }
  Place pl;
  pl.p_ = F->p();
  for (const auto& c : mp.coeffs()) pl.minpoly_.push_back(c.prime_value());
  Fq b = embed(canonical_root(pl.p_, pl.minpoly_), F);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (b == a) {
      pl.index_ = i;
      return pl;
    }
    b = b.frobenius();
  }
  throw ArithError("internal error: element not found among conjugates");
}

Place Place::make(std::uint32_t p, std::vector<std::uint32_t> minpoly, std::uint32_t index) {
  if (!is_prime(p)) throw ArithError("place over non-prime characteristic " + std::to_string(p));
  if (minpoly.size() < 2 || minpoly.back() != 1) throw ArithError("place polynomial must be monic of positive degree");
  for (auto c : minpoly)
    if (c >= p) throw ArithError("place polynomial coefficient out of range");
  if (index >= minpoly.size() - 1) throw ArithError("place root index out of range");
  FieldRef Fp = field_make(p, 1);
  std::vector<std::int64_t> ints(minpoly.begin(), minpoly.end());
  auto fac = factor(Poly::from_ints(Fp, ints));
  if (fac.size() != 1 || fac[0].multiplicity != 1) throw ArithError("place polynomial is not irreducible over F_" + std::to_string(p));
  Place pl;
  pl.p_ = p;
  pl.minpoly_ = std::move(minpoly);
  pl.index_ = index;
  return pl;
}

Fq Place::root_in(FieldRef F) const {
  if (is_infinity()) throw ArithError("the place at infinity has no finite coordinate");
  if (F->p() != p_ || F->degree() % degree() != 0)
    throw ArithError("place of degree " + std::to_string(degree()) + " is not rational over F_" + std::to_string(F->order()));
  return embed(canonical_root(p_, minpoly_), F).frobenius(index_);
}

Place Place::frobenius(std::uint64_t k) const {
  if (is_infinity()) return *this;
  Place r = *this;
  r.index_ = static_cast<std::uint32_t>((index_ + k % degree()) % degree());
  return r;
}

std::strong_ordering Place::operator<=>(const Place& o) const {
  if (is_infinity() || o.is_infinity()) return is_infinity() <=> o.is_infinity();
  if (auto c = p_ <=> o.p_; c != 0) return c;
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  for (std::size_t i = minpoly_.size(); i-- > 0;)
    if (auto c = minpoly_[i] <=> o.minpoly_[i]; c != 0) return c;
  return index_ <=> o.index_;
}

std::string Place::to_string() const {
  if (is_infinity()) return "inf";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < minpoly_.size(); ++i) os << (i ? "," : "") << minpoly_[i];
  os << ")#" << index_;
  return os.str();
}

}  // namespace degp::arith
