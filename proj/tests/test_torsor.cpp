#include "degp/torsor/torsor.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace degp::torsor;
using namespace testsupport;

namespace {

Place at(FieldRef F, std::int64_t a) { return Place::from_element(Fq::from_int(F, a)); }

RationalFunction inv_t_pow(FieldRef F, int k) { return RationalFunction::t(F).pow(-k); }

}  // namespace

TEST_CASE("as_reduce examples") {
  FieldRef F3 = field_make(3, 1);
  auto r = as_reduce(inv_t_pow(F3, 3));
  REQUIRE(r);
  CHECK(*r == inv_t_pow(F3, 1));
  auto r2 = as_reduce(inv_t_pow(F3, 2));
  REQUIRE(r2);
  CHECK(*r2 == inv_t_pow(F3, 2));
  CHECK_FALSE(as_reduce(RationalFunction(field_make(2, 1))));
  CHECK_THROWS_AS(TorsorRep::make(GroupKind::Etale, RationalFunction(field_make(2, 1))), SplitTorsor);
  // t^3 - t is in the image of a -> a^3 - a
  CHECK_FALSE(as_reduce(RationalFunction(P(F3, {0, -1, 0, 1}))));
}

TEST_CASE("as_reduce: idempotent, class-invariant, pole orders prime to p") {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
    FieldRef F = field_make(p, 1 + trial % 2);
    RationalFunction g = random_function(F, 4, rng);
    RationalFunction a = random_function(F, 2, rng);
    auto base = as_reduce(g);
    auto shifted = as_reduce(g + (a.pow(static_cast<int>(p)) - a));
    REQUIRE(base.has_value() == shifted.has_value());
    if (!base) continue;
    ++checked;
    CHECK(*base == *shifted);
    CHECK(*as_reduce(*base) == *base);
    for (auto& [z, k] : divisor(*base))
      if (k < 0) CHECK((-k) % static_cast<int>(p) != 0);
  }
  CHECK(checked > 80);
}

TEST_CASE("additive and Kummer reductions are class functions") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 5;
    FieldRef F = field_make(p, 1 + trial % 2);
    RationalFunction g = random_function(F, 3, rng);
    RationalFunction a = random_function(F, 2, rng);
    auto x = additive_reduce(g), y = additive_reduce(g + a.pow(static_cast<int>(p)));
    REQUIRE(x.has_value() == y.has_value());
    if (x) CHECK(*x == *y);
    auto u = kummer_reduce(g), v = kummer_reduce(g * a.pow(static_cast<int>(p)) * RationalFunction::constant(random_nonzero(F, rng)));
    REQUIRE(u.has_value() == v.has_value());
    if (u) CHECK(*u == *v);
  }
}

TEST_CASE("omega examples") {
  FieldRef F3 = field_make(3, 1);
  auto T = TorsorRep::make(GroupKind::Mult, RationalFunction::t(F3));
  CHECK(omega(T) == inv_t_pow(F3, 1));

  auto K = TorsorRep::make(GroupKind::Mult, RationalFunction(P(F3, {1, 0, 1})));
  CHECK(omega(K) == RationalFunction(P(F3, {0, 2}), P(F3, {1, 0, 1})));
  CHECK(differential_order_at(omega(K), at(F3, 0)) == 1);

  auto E = TorsorRep::make(GroupKind::Etale, inv_t_pow(F3, 2));
  CHECK(omega(E) == inv_t_pow(F3, 3) * RationalFunction::constant(Fq::from_int(F3, -2)));
}

TEST_CASE("conductor_residue_at examples") {
  FieldRef F3 = field_make(3, 1);
  auto T = TorsorRep::make(GroupKind::Mult, RationalFunction::t(F3));
  CHECK(conductor_residue_at(T, at(F3, 0)) == Label{0, 1});
  CHECK(conductor_residue_at(T, Place::infinity()) == Label{0, 2});
  CHECK(conductor_residue_at(T, at(F3, 1)) == Label{-1, 0});

  // simple zero of omega gives -2, regular nonvanishing point gives -1
  auto K = TorsorRep::make(GroupKind::Mult, RationalFunction(P(F3, {1, 0, 1})));
  CHECK(conductor_residue_at(K, at(F3, 0)).m == -2);
  CHECK(conductor_residue_at(K, at(F3, 1)).m == -1);

  auto E = TorsorRep::make(GroupKind::Etale, inv_t_pow(F3, 2));
  CHECK(conductor_residue_at(E, at(F3, 0)) == Label{2, 0});
  CHECK(conductor_residue_at(E, at(F3, 1)) == Label{0, 0});

  auto M = TorsorRep::make(GroupKind::Mult, RationalFunction(P(F3, {0, 0, 1, 1})));  // t^2 (t+1)
  CHECK(conductor_residue_at(M, at(F3, 0)) == Label{0, 2});
}

TEST_CASE("uniform conductor rule for additive poles") {
  for (std::uint32_t p : {3u, 5u}) {
    FieldRef F = field_make(p, 1);
    for (int n = 1; n <= 7; ++n) {
      if (n % static_cast<int>(p) == 0) continue;
      auto A = TorsorRep::make(GroupKind::Add, inv_t_pow(F, n));
      CHECK(conductor_residue_at(A, at(F, 0)).m == n);
      CHECK(conductor_residue_at(A, at(F, 1)).m <= 0);
    }
  }
}

TEST_CASE("boundary type invariants") {
  CHECK_FALSE(boundary_type_problem({GroupKind::Mult, -1, 0}, 3));
  CHECK_FALSE(boundary_type_problem({GroupKind::Mult, 0, 2}, 3));
  CHECK(boundary_type_problem({GroupKind::Etale, 0, 1}, 3));
  CHECK(boundary_type_problem({GroupKind::Add, 3, 0}, 3));
  CHECK(boundary_type_problem({GroupKind::Mult, 0, 3}, 3));
}

TEST_CASE("is_admissible examples") {
  FieldRef F3 = field_make(3, 1);
  auto T = TorsorRep::make(GroupKind::Mult, RationalFunction::t(F3));
  CHECK(is_admissible(T, {at(F3, 0), Place::infinity()}));
  CHECK_FALSE(is_admissible(T, {at(F3, 0)}));

  auto K = TorsorRep::make(GroupKind::Mult, RationalFunction(P(F3, {1, 0, 1})));
  auto roots = zeros_with_multiplicity(K.rep());
  std::vector<Place> special{roots[0].first, roots[1].first, Place::infinity()};
  CHECK_FALSE(is_admissible(K, special));
  CHECK(admissibility_violations(K, special) == std::vector<Place>{at(F3, 0)});

  auto E = TorsorRep::make(GroupKind::Etale, inv_t_pow(F3, 2));
  CHECK(is_admissible(E, {at(F3, 0)}));
}

TEST_CASE("canonical divisor degree: sum of ord(omega) = -2") {
  std::mt19937_64 rng(303);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    FieldRef F = field_make(trial % 2 ? 3 : 5, 1 + (trial / 2) % 2);
    RationalFunction f = random_function(F, 4, rng);
    auto red = kummer_reduce(f);
    if (!red) continue;
    auto T = TorsorRep::make(GroupKind::Mult, f);
    int total = 0;
    for (auto& [z, k] : differential_divisor(omega(T))) total += k;
    CHECK(total == -2);
    ++checked;
  }
  CHECK(checked > 90);
}

TEST_CASE("galois_apply: conjugation of a Kummer coefficient") {
  FieldRef F9 = field_make(3, 2);
  Fq a = Fq::generator(F9);
  auto T = TorsorRep::make(GroupKind::Mult, RationalFunction(Poly(F9, {-a, Fq::from_int(F9, 1)})), {Place::from_element(a), Place::infinity()});
  auto sigma = GaloisElement::frobenius(1);
  auto T1 = galois_apply(sigma, T);
  CHECK(T1.rep() == RationalFunction(Poly(F9, {-a.frobenius(), Fq::from_int(F9, 1)})));
  CHECK_FALSE(T1 == T);
  CHECK(galois_apply(sigma, T1) == T);
  CHECK(galois_apply(GaloisElement::identity(), T) == T);
}

TEST_CASE("galois_apply transports labels") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    FieldRef F = field_make(trial % 2 ? 3 : 5, 2);
    const GroupKind kind = std::vector<GroupKind>{GroupKind::Etale, GroupKind::Mult, GroupKind::Add}[trial % 3];
    RationalFunction f = random_function(F, 3, rng);
    std::optional<TorsorRep> T;
    try {
      T = TorsorRep::make(kind, f);
    } catch (const SplitTorsor&) {
      continue;
    }
    GaloisElement sigma{1, static_cast<std::uint64_t>(1 + trial % 3)};
    auto S = galois_apply(sigma, *T);
    CHECK(S.kind() == T->kind());
    auto support = special_support(*T);
    std::vector<Place> moved;
    for (auto& z : support) {
      moved.push_back(z.frobenius(sigma.absolute_power()));
      CHECK(conductor_residue_at(S, moved.back()) == conductor_residue_at(*T, z));
    }
    std::sort(moved.begin(), moved.end());
    CHECK(special_support(S) == moved);
    CHECK(is_admissible(S, moved));
    CHECK(omega(S) == omega(*T).frobenius_coeffs(sigma.absolute_power()));
  }
}
