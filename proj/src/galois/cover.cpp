#include <algorithm>
#include <map>
#include <set>

#include "degp/degdata/encode.hpp"
#include "degp/galois/galois.hpp"

namespace degp::galois {

using arith::Fq;
using arith::Poly;
using arith::RationalFunction;
using degdata::Component;
using degdata::ComponentPoint;
using degdata::PointRef;

namespace {

int default_delta(const PrimeContext& ctx, const CoverComponent& c) {
  if (c.delta) return *c.delta;
  if (!c.torsor) return 0;
  switch (c.torsor->kind()) {
    case GroupKind::Etale:
      return 0;
    case GroupKind::Mult:
      return ctx.vKp;
    case GroupKind::Add:
      break;
  }
  throw ExtractionError("component " + c.id + ": an additive torsor needs an explicit delta");
}

}  // namespace

GlobalDegData extract_degdata(const PrimeContext& ctx, const CoverDescription& cover) {
  GlobalDegData g;
  const std::size_t n = cover.components.size();
  std::vector<std::set<Place>> node_places(n);
  for (std::size_t i = 0; i < cover.nodes.size(); ++i)
    for (const auto* pt : {&cover.nodes[i].a, &cover.nodes[i].b}) {
      if (pt->component >= n) throw ExtractionError("nodes[" + std::to_string(i) + "] names a missing component");
      node_places[pt->component].insert(pt->place);
    }

  // per component: place -> role (0 node, 1 marked, 2 critical)
  std::vector<std::map<Place, int>> roles(n);
  for (std::size_t ci = 0; ci < n; ++ci) {
    const auto& cc = cover.components[ci];
    auto& role = roles[ci];
    for (const auto& z : node_places[ci]) role[z] = 0;
    Component comp;
    comp.id = cc.id;
    comp.genus = cc.genus;
    comp.delta = default_delta(ctx, cc);
    if (!cc.torsor) {
      comp.torsor = degdata::SplitMarker{};
    } else {
      const auto& T = *cc.torsor;
      for (const auto& z : T.punctures()) role.try_emplace(z, 1);
      for (const auto& z : torsor::critical_points(T)) role.try_emplace(z, 2);
      std::vector<Place> special;
      for (const auto& [z, r] : role) special.push_back(z);
      auto bad = torsor::admissibility_violations(T, special);
      if (!bad.empty())
        throw ExtractionError("component " + cc.id + ": torsor is not admissible at " + bad.front().to_string());
      comp.torsor = T;
    }
    for (const auto& [z, r] : role) {
      ComponentPoint pt;
      pt.name = z.to_string();
      pt.place = z;
      pt.label = cc.torsor ? torsor::conductor_residue_at(*cc.torsor, z) : torsor::Label{0, 0};
      comp.points.push_back(std::move(pt));
    }
    g.components.push_back(std::move(comp));
  }

  auto ref = [&](std::size_t ci, const Place& z) {
    const auto it = roles[ci].find(z);
    return PointRef{ci, static_cast<std::size_t>(std::distance(roles[ci].begin(), it))};
  };
  for (const auto& nd : cover.nodes) g.nodes.push_back({ref(nd.a.component, nd.a.place), ref(nd.b.component, nd.b.place), 0, std::nullopt});
  for (std::size_t ci = 0; ci < n; ++ci)
    for (const auto& [z, r] : roles[ci]) {
      auto at = ref(ci, z);
      if (r == 1) g.marked.push_back({at, g.point(at).label.m + 1, std::nullopt});
      if (r == 2) g.critical.push_back({at, std::nullopt});
    }
  g.r = g.branch_total();
  return g;
}

CoverDescription act(const GaloisElement& sigma, const CoverDescription& cover) {
  CoverDescription out = cover;
  const auto k = sigma.absolute_power();
  for (auto& c : out.components)
    if (c.torsor) c.torsor = torsor::galois_apply(sigma, *c.torsor);
  for (auto& nd : out.nodes) {
    nd.a.place = nd.a.place.frobenius(k);
    nd.b.place = nd.b.place.frobenius(k);
  }
  return out;
}

bool equivariance_check(const PrimeContext& ctx, const GaloisElement& sigma, const CoverDescription& cover) {
  return degdata::canonical_encode(extract_degdata(ctx, act(sigma, cover))) ==
         degdata::canonical_encode(act(sigma, extract_degdata(ctx, cover)));
}

namespace {

struct Sampler {
  arith::FieldRef F;
  std::vector<Fq> elems;
  std::mt19937_64& rng;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  const Fq& element() { return elems[static_cast<std::size_t>(uniform(0, static_cast<int>(elems.size()) - 1))]; }
  Fq nonzero() {
    for (;;) {
      const Fq& a = element();
      if (!a.is_zero()) return a;
    }
  }
  RationalFunction linear(const Fq& a) { return RationalFunction(Poly::x(F) - Poly::constant(a)); }

  /// Sum of a few principal parts, finite or at infinity.
  RationalFunction additive() {
    RationalFunction g(F);
    const int terms = uniform(1, 2);
    for (int i = 0; i < terms; ++i) {
      const Place z = uniform(0, 3) == 0 ? Place::infinity() : Place::from_element(element());
      g = g + RationalFunction::constant(nonzero()) * RationalFunction::pole_at(z, F, uniform(1, 3));
    }
    return g;
  }

  RationalFunction multiplicative() {
    RationalFunction f = RationalFunction::constant(nonzero());
    const int factors = uniform(1, 3);
    for (int i = 0; i < factors; ++i) {
      const int e = uniform(1, static_cast<int>(F->p()) - 1) * (uniform(0, 1) ? 1 : -1);
      f = f * linear(element()).pow(e);
    }
    return f;
  }
};

std::optional<TorsorRep> sample_torsor(Sampler& s, GroupKind kind, int max_punctures) {
  try {
    const auto rep = kind == GroupKind::Mult ? s.multiplicative() : s.additive();
    const auto bare = TorsorRep::make(kind, rep);
    const auto crit = torsor::critical_points(bare);
    std::vector<Place> punct;
    for (const auto& z : torsor::special_support(bare))
      if (!std::binary_search(crit.begin(), crit.end(), z)) punct.push_back(z);
    if (static_cast<int>(punct.size()) > max_punctures) return std::nullopt;
    return TorsorRep::make(kind, rep, punct);
  } catch (const torsor::SplitTorsor&) {
    return std::nullopt;
  }
}

std::optional<Place> regular_point(Sampler& s, const TorsorRep& T) {
  const auto support = torsor::special_support(T);
  for (int tries = 0; tries < 64; ++tries) {
    const Place z = Place::from_element(s.element());
    if (!std::binary_search(support.begin(), support.end(), z)) return z;
  }
  return std::nullopt;
}

}  // namespace

CoverDescription random_cover(const PrimeContext& ctx, std::mt19937_64& rng, int max_punctures) {
  Sampler s{arith::field_make(static_cast<std::uint32_t>(ctx.p), 2), {}, rng};
  s.elems = arith::all_elements(s.F);
  const bool has_add = ctx.vKp > ctx.p - 1;
  for (;;) {
    CoverDescription cover;
    const int count = s.uniform(1, 2);
    bool ok = true;
    for (int i = 0; i < count && ok; ++i) {
      auto kind = static_cast<GroupKind>(s.uniform(0, has_add ? 2 : 1));
      auto T = sample_torsor(s, kind, max_punctures);
      if (!T) {
        ok = false;
        break;
      }
      CoverComponent c{"X" + std::to_string(i + 1), 0, *T, std::nullopt};
      if (kind == GroupKind::Add) c.delta = ctx.p - 1;
      cover.components.push_back(std::move(c));
    }
    if (!ok) continue;
    if (count == 2) {
      auto za = regular_point(s, *cover.components[0].torsor);
      auto zb = regular_point(s, *cover.components[1].torsor);
      if (!za || !zb) continue;
      cover.nodes.push_back({{0, *za}, {1, *zb}});
    }
    return cover;
  }
}

}  // namespace degp::galois
