#include "degp/arith/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "degp/arith/numtheory.hpp"

namespace degp::arith {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Largest field we agree to build; keeps every exponent comfortably inside 64 bits.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;

// a*b mod (f, p) for a, b of length n, f monic of length n+1.
Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  std::vector<std::uint64_t> r(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < n; ++j) r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = r.size(); k-- > n;) {
    std::uint64_t c = r[k];
    if (!c) continue;
    for (std::size_t i = 0; i < n; ++i)
      r[k - n + i] = (r[k - n + i] + (p - c) * f[i]) % p;
    r[k] = 0;
  }
  Coeffs out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

Coeffs one_of(std::size_t n) {
  Coeffs c(n, 0);
  c[0] = 1;
  return c;
}

Coeffs x_of(std::size_t n, const Coeffs& f, std::uint32_t p) {
  Coeffs c(n, 0);
  if (n > 1) {
    c[1] = 1;
  } else {
    c[0] = (p - f[0]) % p;  // x == -f0 mod (x + f0)
  }
  return c;
}

Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint32_t p) {
  Coeffs r = one_of(f.size() - 1);
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = mulmod(base, base, f, p);
  }
  return r;
}

bool is_primitive_modulus(const Coeffs& f, std::uint32_t p, std::uint64_t q,
                          const std::vector<std::uint64_t>& primes) {
  if (f[0] == 0) return false;
  const std::size_t n = f.size() - 1;
  Coeffs x = x_of(n, f, p);
  if (powmod(x, q - 1, f, p) != one_of(n)) return false;
  for (std::uint64_t l : primes)
    if (powmod(x, (q - 1) / l, f, p) == one_of(n)) return false;
  return true;
}

// C_d(y) mod f, with y given as a residue mod f.
bool vanishes_at(const Coeffs& cd, const Coeffs& y, const Coeffs& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  Coeffs acc(n, 0);
  for (std::size_t k = cd.size(); k-- > 0;) {
    acc = mulmod(acc, y, f, p);
    acc[0] = (acc[0] + cd[k]) % p;
  }
  return std::all_of(acc.begin(), acc.end(), [](std::uint32_t v) { return v == 0; });
}

std::recursive_mutex& conway_mutex() {
  static std::recursive_mutex m;
  return m;
}

}  // namespace

Coeffs conway_polynomial(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw ArithError("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw ArithError("field degree must be positive");
  std::uint64_t q = 0;
  try {
    q = ipow(p, n);
  } catch (const std::overflow_error&) {
    q = kMaxOrder + 1;
  }
  if (q > kMaxOrder) throw ArithError("field of order " + std::to_string(p) + "^" + std::to_string(n) + " is too large");

  std::lock_guard<std::recursive_mutex> lock(conway_mutex());
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> cache;
  if (auto it = cache.find({p, n}); it != cache.end()) return it->second;

  std::vector<std::pair<std::uint32_t, Coeffs>> subs;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) subs.emplace_back(d, conway_polynomial(p, d));
  const auto primes = prime_divisors(q - 1);

  // alpha digits, most significant alpha_{n-1}; coefficient of x^i is (-1)^{n-i} alpha_i.
  Coeffs alpha(n, 0);
  for (std::uint64_t counter = 0; counter < q; ++counter) {
    std::uint64_t c = counter;
    for (std::uint32_t i = 0; i < n; ++i) {
      alpha[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    Coeffs f(n + 1);
    f[n] = 1;
    for (std::uint32_t i = 0; i < n; ++i)
      f[i] = ((n - i) % 2 == 0) ? alpha[i] : (p - alpha[i]) % p;
    if (!is_primitive_modulus(f, p, q, primes)) continue;
    bool compatible = true;
    for (const auto& [d, cd] : subs) {
      Coeffs y = powmod(x_of(n, f, p), (q - 1) / (ipow(p, d) - 1), f, p);
      if (!vanishes_at(cd, y, f, p)) {
        compatible = false;
        break;
      }
    }
    if (!compatible) continue;
    cache.emplace(std::make_pair(p, n), f);
    return f;
  }
  throw ArithError("no Conway polynomial found");  // unreachable for valid input
}

Field::Field(std::uint32_t p, std::uint32_t n, Coeffs modulus)
    : p_(p), n_(n), q_(ipow(p, n)), modulus_(std::move(modulus)) {}

FieldRef field_make(std::uint32_t p, std::uint32_t n) {
  static std::mutex m;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  {
    std::lock_guard<std::mutex> lock(m);
    if (auto it = registry.find({p, n}); it != registry.end()) return it->second.get();
  }
  Coeffs modulus = conway_polynomial(p, n);
  std::lock_guard<std::mutex> lock(m);
  auto& slot = registry[{p, n}];
  if (!slot) slot.reset(new Field(p, n, std::move(modulus)));
  return slot.get();
}

// ---- Fq ----

Fq::Fq(FieldRef field) : field_(field), c_(field->degree(), 0) {}

Fq Fq::from_int(FieldRef field, std::int64_t v) {
  Fq r(field);
  r.c_[0] = static_cast<std::uint32_t>(mod_floor(v, field->p()));
  return r;
}

Fq Fq::generator(FieldRef field) {
  Fq r(field);
  r.c_ = x_of(field->degree(), field->modulus(), field->p());
  return r;
}

Fq Fq::from_coeffs(FieldRef field, Coeffs coeffs) {
  if (coeffs.size() != field->degree())
    throw ArithError("element of F_" + std::to_string(field->order()) + " needs " +
                     std::to_string(field->degree()) + " coefficients, got " + std::to_string(coeffs.size()));
  for (auto& c : coeffs)
    if (c >= field->p()) throw ArithError("coefficient " + std::to_string(c) + " out of range for p=" + std::to_string(field->p()));
  Fq r(field);
  r.c_ = std::move(coeffs);
  return r;
}

void Fq::check_same(const Fq& o) const {
  if (field_ != o.field_ || !field_) throw ArithError("field mismatch in finite field arithmetic");
}

bool Fq::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Fq::is_one() const { return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; }); }

bool Fq::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint32_t Fq::prime_value() const {
  if (!in_prime_field()) throw ArithError("element is not in the prime field");
  return c_[0];
}

Fq Fq::operator+(const Fq& o) const {
  check_same(o);
  Fq r(*this);
  const auto p = field_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % p;
  return r;
}

Fq Fq::operator-(const Fq& o) const {
  check_same(o);
  Fq r(*this);
  const auto p = field_->p();
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + p - o.c_[i]) % p;
  return r;
}

Fq Fq::operator-() const {
  Fq r(*this);
  const auto p = field_->p();
  for (auto& v : r.c_) v = (p - v) % p;
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  check_same(o);
  Fq r(field_);
  if (field_->degree() == 1) {
    r.c_[0] = static_cast<std::uint32_t>(std::uint64_t{c_[0]} * o.c_[0] % field_->p());
  } else {
    r.c_ = mulmod(c_, o.c_, field_->modulus(), field_->p());
  }
  return r;
}

Fq Fq::inv() const {
  if (is_zero()) throw ArithError("division by zero in F_" + std::to_string(field_->order()));
  return pow(field_->order() - 2);
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

Fq Fq::pow(std::uint64_t e) const {
  Fq r = from_int(field_, 1);
  Fq b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Fq Fq::frobenius(std::uint64_t k) const {
  k %= field_->degree();
  Fq r = *this;
  for (std::uint64_t i = 0; i < k; ++i) r = r.pow(field_->p());
  return r;
}

std::uint32_t Fq::frobenius_orbit_length() const {
  Fq y = frobenius();
  std::uint32_t d = 1;
  while (!(y == *this)) {
    y = y.frobenius();
    ++d;
  }
  return d;
}

std::strong_ordering Fq::operator<=>(const Fq& o) const {
  if (field_ != o.field_) {
    auto a = field_ ? std::make_pair(field_->p(), field_->degree()) : std::make_pair(0u, 0u);
    auto b = o.field_ ? std::make_pair(o.field_->p(), o.field_->degree()) : std::make_pair(0u, 0u);
    return a <=> b;
  }
  for (std::size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
  return std::strong_ordering::equal;
}

std::string Fq::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

Fq embed(const Fq& x, FieldRef target) {
  FieldRef src = x.field();
  if (src == target) return x;
  if (src->p() != target->p() || target->degree() % src->degree() != 0)
    throw ArithError("cannot embed F_" + std::to_string(src->order()) + " into F_" + std::to_string(target->order()));
  static std::mutex m;
  static std::map<std::pair<FieldRef, FieldRef>, Fq> images;
  Fq gamma;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = images.find({src, target});
    if (it == images.end()) {
      Fq g = Fq::generator(target).pow((target->order() - 1) / (src->order() - 1));
      it = images.emplace(std::make_pair(src, target), g).first;
    }
    gamma = it->second;
  }
  Fq acc(target);
  const auto& c = x.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * gamma + Fq::from_int(target, c[k]);
  return acc;
}

std::optional<Fq> descend(const Fq& x, FieldRef target) {
  FieldRef src = x.field();
  if (src == target) return x;
  if (src->p() != target->p() || src->degree() % target->degree() != 0)
    throw ArithError("F_" + std::to_string(target->order()) + " is not a subfield of F_" + std::to_string(src->order()));
  if (x.frobenius(target->degree()) != x) return std::nullopt;
  // Solve sum_i c_i gamma^i = x over F_p, gamma the image of the generator.
  const std::uint32_t p = src->p(), d = target->degree(), N = src->degree();
  Fq gamma = embed(Fq::generator(target), src);
  std::vector<std::vector<std::uint64_t>> rows(N, std::vector<std::uint64_t>(d + 1));
  Fq pw = Fq::from_int(src, 1);
  for (std::uint32_t j = 0; j < d; ++j) {
    for (std::uint32_t i = 0; i < N; ++i) rows[i][j] = pw.coeffs()[i];
    pw = pw * gamma;
  }
  for (std::uint32_t i = 0; i < N; ++i) rows[i][d] = x.coeffs()[i];
  std::uint32_t r = 0;
  std::vector<std::uint32_t> pivot_col;
  for (std::uint32_t c = 0; c < d && r < N; ++c) {
    std::uint32_t piv = r;
    while (piv < N && rows[piv][c] == 0) ++piv;
    if (piv == N) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t inv = Fq::from_int(field_make(p, 1), static_cast<std::int64_t>(rows[r][c])).inv().prime_value();
    for (auto& v : rows[r]) v = v * inv % p;
    for (std::uint32_t i = 0; i < N; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::uint32_t k = 0; k <= d; ++k) rows[i][k] = (rows[i][k] + (p - f) * rows[r][k]) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  Coeffs sol(d, 0);
  for (std::uint32_t i = 0; i < pivot_col.size(); ++i) sol[pivot_col[i]] = static_cast<std::uint32_t>(rows[i][d]);
  Fq y = Fq::from_coeffs(target, sol);
  if (embed(y, src) != x) throw ArithError("internal error: descent failed");
  return y;
}

std::uint32_t definition_degree(const Fq& x) {
  const std::uint32_t N = x.field()->degree();
  for (std::uint32_t d = 1; d < N; ++d)
    if (N % d == 0 && x.frobenius(d) == x) return d;
  return N;
}

std::vector<Fq> all_elements(FieldRef field) {
  if (field->order() > (1u << 20)) throw ArithError("field too large to list");
  std::vector<Fq> out;
  out.reserve(field->order());
  const std::uint32_t n = field->degree(), p = field->p();
  for (std::uint64_t counter = 0; counter < field->order(); ++counter) {
    Coeffs c(n);
    std::uint64_t v = counter;
    for (std::uint32_t i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    out.push_back(Fq::from_coeffs(field, std::move(c)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace degp::arith
