#include <functional>
#include <map>

#include "degp/degdata/encode.hpp"
#include "degp/galois/galois.hpp"
#include "degp/validate/validate.hpp"

namespace degp::galois {

using degdata::Anchor;
using degdata::Edge;
using degdata::MarkedPoint;
using degdata::SymbolicTorsor;
using degdata::Tree;
using degdata::Vertex;
using torsor::Label;

namespace {

/// Every label that can occur at a non-split point of the given kind within |m| <= M. A
/// superset of what the validator accepts; the validator has the last word.
std::vector<Label> candidate_labels(GroupKind kind, bool edge, int M, int p) {
  std::vector<Label> out;
  for (int m = -M; m <= M; ++m) {
    if (m != 0 && m % p == 0) continue;
    switch (kind) {
      case GroupKind::Etale:
        if (m > 0 || (m == 0 && edge)) out.push_back({m, 0});
        break;
      case GroupKind::Mult:
        if (m < 0) out.push_back({m, 0});
        if (m == 0)
          for (int h = 1; h < p; ++h) out.push_back({0, h});
        break;
      case GroupKind::Add:
        if (m != 0) out.push_back({m, 0});
        break;
    }
  }
  return out;
}

Label opposite(const Label& l, int p) { return {-l.m, (p - l.h) % p}; }

/// Rooted tree shapes on n vertices as parent arrays with parent[i] < i.
void tree_shapes(int n, std::vector<std::size_t>& parent, const std::function<void()>& emit) {
  if (static_cast<int>(parent.size()) == n) {
    emit();
    return;
  }
  const std::size_t i = parent.size();
  for (std::size_t q = 0; q < i; ++q) {
    parent.push_back(q);
    tree_shapes(n, parent, emit);
    parent.pop_back();
  }
}

/// Multisets of size <= k drawn from `pool`, as index lists in nondecreasing order.
void multisets(std::size_t pool, int k, std::size_t from, std::vector<std::size_t>& cur,
               const std::function<void()>& emit) {
  emit();
  if (static_cast<int>(cur.size()) == k) return;
  for (std::size_t i = from; i < pool; ++i) {
    cur.push_back(i);
    multisets(pool, k, i, cur, emit);
    cur.pop_back();
  }
}

/// Labels on a vertex satisfy the degree and residue conditions of a genus-0 line.
bool vertex_closes(GroupKind kind, const std::vector<Label>& labels, int p) {
  if (kind == GroupKind::Etale) {
    for (const auto& l : labels)
      if (l.m > 0) return true;
    return false;
  }
  int deg = 0, res = 0;
  for (const auto& l : labels) {
    deg += l.m + 1;
    res += l.h;
  }
  return deg == 2 && (kind != GroupKind::Mult || res % p == 0);
}

/// Depth-first assignment of kinds, labels and thicknesses to a fixed tree shape. Vertex i is
/// completed (marked points, the parent side of each child edge, an optional second anchor)
/// before vertex i+1; the child sides follow by antisymmetry.
class Filler {
 public:
  Filler(const PrimeContext& ctx, const EnumBounds& b, bool two_anchors, std::function<void(const Tree&, const std::vector<Anchor>&)> emit)
      : ctx_(ctx), b_(b), two_(two_anchors), emit_(std::move(emit)) {}

  void run(const std::vector<std::size_t>& parent) {
    const std::size_t n = parent.size();
    children_.assign(n, {});
    tree_ = Tree{};
    tree_.vertices.assign(n, Vertex{});
    for (std::size_t i = 1; i < n; ++i) {
      children_[parent[i]].push_back(tree_.edges.size());
      Edge e;
      e.u = parent[i];
      e.v = i;
      tree_.edges.push_back(e);
    }
    for (int d0 = 0; d0 <= ctx_.vKp; d0 += ctx_.p - 1) {
      tree_.vertices[0].delta = d0;
      tree_.vertices[0].torsor = SymbolicTorsor{validate::kind_from_delta(ctx_, d0)};
      const auto kind = validate::kind_from_delta(ctx_, d0);
      for (const auto& l : candidate_labels(kind, false, b_.max_conductor, ctx_.p))
        for (int t = 1; t <= b_.max_thickness; ++t) {
          anchors_.assign(1, Anchor{0, l, std::nullopt, ctx_.p * t});
          fill(0, !two_);
        }
    }
  }

 private:
  std::vector<Label> labels_at(std::size_t v) const {
    std::vector<Label> out;
    for (const auto& a : anchors_)
      if (a.vertex == v) out.push_back(a.label);
    for (const auto& e : tree_.edges) {
      if (e.u == v) out.push_back(e.at_u.label);
      if (e.v == v) out.push_back(e.at_v.label);
    }
    for (const auto& mp : tree_.vertices[v].marked) out.push_back(mp.label);
    return out;
  }

  void fill(std::size_t v, bool second_placed) {
    if (v == tree_.vertices.size()) {
      if (second_placed) emit_(tree_, anchors_);
      return;
    }
    const auto kind = *degdata::kind_of(tree_.vertices[v].torsor);
    const auto marked_pool = candidate_labels(kind, false, b_.max_conductor, ctx_.p);
    std::vector<std::size_t> pick;
    multisets(marked_pool.size(), b_.max_marked, 0, pick, [&] {
      tree_.vertices[v].marked.clear();
      for (auto i : pick) {
        const auto& l = marked_pool[i];
        if (l.m + 1 >= 1) tree_.vertices[v].marked.push_back(MarkedPoint{std::nullopt, l, l.m + 1});
      }
      if (tree_.vertices[v].marked.size() != pick.size()) return;
      // the second anchor of double data may sit on this vertex
      if (!second_placed) {
        for (const auto& l : marked_pool)
          for (int t = 1; t <= b_.max_thickness; ++t) {
            anchors_.push_back(Anchor{v, l, std::nullopt, ctx_.p * t});
            edges_from(v, 0, true);
            anchors_.pop_back();
          }
      }
      edges_from(v, 0, second_placed);
    });
    tree_.vertices[v].marked.clear();
  }

  void edges_from(std::size_t v, std::size_t k, bool second_placed) {
    const auto kind = *degdata::kind_of(tree_.vertices[v].torsor);
    if (k == children_[v].size()) {
      if (vertex_closes(kind, labels_at(v), ctx_.p)) fill(v + 1, second_placed);
      return;
    }
    auto& e = tree_.edges[children_[v][k]];
    auto& child = tree_.vertices[e.v];
    for (const auto& l : candidate_labels(kind, true, b_.max_conductor, ctx_.p))
      for (int t = 1; t <= b_.max_thickness; ++t) {
        e.e = ctx_.p * t;
        const int d = validate::delta_across(ctx_, tree_.vertices[v].delta, l.m, e.e);
        if (!validate::delta_in_range(ctx_, d)) continue;
        e.at_u.label = l;
        e.at_v.label = opposite(l, ctx_.p);
        child.delta = d;
        child.torsor = SymbolicTorsor{validate::kind_from_delta(ctx_, d)};
        edges_from(v, k + 1, second_placed);
      }
  }

  const PrimeContext& ctx_;
  EnumBounds b_;
  bool two_;
  std::function<void(const Tree&, const std::vector<Anchor>&)> emit_;
  std::vector<std::vector<std::size_t>> children_;
  Tree tree_;
  std::vector<Anchor> anchors_;
};

std::optional<torsor::BoundaryType> boundary_of(const PrimeContext& ctx, const Tree& tree, const Anchor& a) {
  const int d = validate::delta_across(ctx, tree.vertices[a.vertex].delta, a.label.m, a.e);
  if (!validate::delta_in_range(ctx, d)) return std::nullopt;
  const auto far = opposite(a.label, ctx.p);
  return torsor::BoundaryType{validate::kind_from_delta(ctx, d), far.m, far.h};
}

int marked_total(const Tree& tree) {
  int r = 0;
  for (const auto& v : tree.vertices)
    for (const auto& mp : v.marked) r += mp.r;
  return r;
}

template <class Data, class Build>
std::vector<Data> enumerate(const PrimeContext& ctx, const EnumBounds& bounds, bool two, Build build) {
  std::map<std::string, Data> classes;
  for (int n = 1; n <= bounds.max_vertices; ++n) {
    Filler filler(ctx, bounds, two, [&](const Tree& tree, const std::vector<Anchor>& anchors) {
      auto d = build(tree, anchors);
      if (!d) return;
      auto key = degdata::canonical_encode(*d);
      if (classes.count(key)) return;
      classes.emplace(std::move(key), std::move(*d));
    });
    std::vector<std::size_t> parent{0};
    tree_shapes(n, parent, [&] { filler.run(parent); });
  }
  std::vector<Data> out;
  out.reserve(classes.size());
  for (auto& [k, d] : classes) out.push_back(std::move(d));
  return out;
}

}  // namespace

std::vector<SimpleDegData> enum_simple(const PrimeContext& ctx, const EnumBounds& bounds) {
  return enumerate<SimpleDegData>(ctx, bounds, false, [&](const Tree& tree, const std::vector<Anchor>& anchors) {
    std::optional<SimpleDegData> out;
    auto b = boundary_of(ctx, tree, anchors[0]);
    if (!b) return out;
    SimpleDegData d{degdata::Species::NonSplit, marked_total(tree), *b, tree, anchors[0]};
    if (validate::check_simple(ctx, d).ok()) out = std::move(d);
    return out;
  });
}

std::vector<DoubleDegData> enum_double(const PrimeContext& ctx, const EnumBounds& bounds) {
  return enumerate<DoubleDegData>(ctx, bounds, true, [&](const Tree& tree, const std::vector<Anchor>& anchors) {
    std::optional<DoubleDegData> out;
    auto b1 = boundary_of(ctx, tree, anchors[0]);
    auto b2 = boundary_of(ctx, tree, anchors[1]);
    if (!b1 || !b2) return out;
    DoubleDegData d{degdata::Species::NonSplit, marked_total(tree), *b1, *b2, tree, anchors[0], anchors[1]};
    if (validate::check_double(ctx, d).ok()) out = std::move(d);
    return out;
  });
}

}  // namespace degp::galois
