#pragma once

// Brute-force reference for the bounded enumeration of simple data: every vertex difference,
// every label at every point and every boundary kind is tried independently, the validator
// filters, and classes are formed by pairwise isomorphism tests. The only fields not searched
// are those fixed by an equation of the axioms: the far side of an edge, the boundary label
// and r.

#include <vector>

#include "degp/degdata/encode.hpp"
#include "degp/validate/validate.hpp"

namespace degp::oracle {

using degdata::PrimeContext;
using degdata::SimpleDegData;
using torsor::GroupKind;
using torsor::Label;

inline std::vector<degdata::SimpleDegData> brute_force_simple(const PrimeContext& ctx, int max_vertices, int M) {
  const int p = ctx.p;
  std::vector<Label> labels;
  for (int m = -M; m <= M; ++m)
    for (int h = 0; h < p; ++h) labels.push_back({m, h});
  std::vector<int> deltas;
  for (int d = 0; d <= ctx.vKp; d += p - 1) deltas.push_back(d);
  const GroupKind kinds[] = {GroupKind::Etale, GroupKind::Mult, GroupKind::Add};

  // at most one marked point per vertex, with r = m + 1
  std::vector<std::vector<degdata::MarkedPoint>> marked_options{{}};
  for (const auto& l : labels) marked_options.push_back({{std::nullopt, l, l.m + 1}});

  std::vector<SimpleDegData> valid;
  auto consider = [&](SimpleDegData d) {
    d.r = 0;
    for (const auto& v : d.tree.vertices)
      for (const auto& mp : v.marked) d.r += mp.r;
    d.boundary.m = -d.origin.label.m;
    d.boundary.h = (p - d.origin.label.h) % p;
    for (auto k : kinds) {
      d.boundary.kind = k;
      if (validate::check_simple(ctx, d).ok()) valid.push_back(d);
    }
  };

  auto vertex = [](int delta, const PrimeContext& c, const std::vector<degdata::MarkedPoint>& marked) {
    degdata::Vertex v;
    v.delta = delta;
    v.torsor = degdata::SymbolicTorsor{validate::kind_from_delta(c, delta)};
    v.marked = marked;
    return v;
  };

  for (int d0 : deltas)
    for (const auto& mk0 : marked_options)
      for (const auto& o : labels) {
        SimpleDegData base;
        base.origin = {0, o, std::nullopt, p};
        base.tree.vertices = {vertex(d0, ctx, mk0)};
        consider(base);
        if (max_vertices < 2) continue;
        // two vertices: the origin may sit on either end of the edge, which is the same
        // shape up to relabelling, so it stays on vertex 0
        for (int d1 : deltas)
          for (const auto& mk1 : marked_options)
            for (const auto& lu : labels) {
              const Label lv{-lu.m, (p - lu.h) % p};
              SimpleDegData d = base;
              d.tree.vertices.push_back(vertex(d1, ctx, mk1));
              d.tree.edges.push_back({0, 1, p, {lu, std::nullopt}, {lv, std::nullopt}});
              consider(std::move(d));
            }
      }

  std::vector<SimpleDegData> reps;
  for (const auto& d : valid) {
    bool seen = false;
    for (const auto& r : reps)
      if (d.species == r.species && d.r == r.r && d.boundary == r.boundary && degdata::is_isomorphic(d, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(d);
  }
  return reps;
}

}  // namespace degp::oracle
