#include <set>

#include "degp/degdata/encode.hpp"
#include "rules.hpp"

namespace degp::validate {

using namespace detail;
using degdata::Anchor;
using degdata::Species;
using degdata::Tree;
using torsor::BoundaryType;

namespace {

struct Boundary {
  std::string name;  // "origin", "end1", "end2"
  const Anchor* anchor;
  BoundaryType type;
};

struct LocalView {
  Species species;
  int r;
  Tree const* tree;
  std::vector<Boundary> boundaries;
};

std::string vpath(std::size_t v) { return "vertices[" + std::to_string(v) + "]"; }
std::string epath(std::size_t e) { return "edges[" + std::to_string(e) + "]"; }

bool radicial_vertex(const degdata::Vertex& x) {
  auto k = degdata::kind_of(x.torsor);
  return k && torsor::is_radicial(*k);
}

std::vector<std::vector<SpecialPoint>> special_points(const LocalView& d) {
  const Tree& t = *d.tree;
  std::vector<std::vector<SpecialPoint>> pts(t.vertices.size());
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    for (std::size_t j = 0; j < t.vertices[v].marked.size(); ++j) {
      const auto& mp = t.vertices[v].marked[j];
      pts[v].push_back({mp.label, mp.location, vpath(v) + ".marked[" + std::to_string(j) + "]", Role::Marked});
    }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const auto& e = t.edges[i];
    if (e.u < pts.size()) pts[e.u].push_back({e.at_u.label, e.at_u.location, epath(i) + ".label_u", Role::Edge});
    if (e.v < pts.size()) pts[e.v].push_back({e.at_v.label, e.at_v.location, epath(i) + ".label_v", Role::Edge});
  }
  for (const auto& b : d.boundaries)
    if (b.anchor->vertex < pts.size())
      pts[b.anchor->vertex].push_back({b.anchor->label, b.anchor->location, b.name, Role::Anchor});
  return pts;
}

class LocalChecker {
 public:
  LocalChecker(const PrimeContext& ctx, const LocalView& d) : ctx_(ctx), d_(d), t_(*d.tree), pts_(special_points(d)) {}

  ValidationReport run() {
    ValidationReport rep;
    rep.entries.push_back(a1());
    rep.entries.push_back(a2());
    rep.entries.push_back(a3());
    if (!structural_ok_) {
      for (const char* id : {"A4", "A5", "A6", "A7", "A8", "A9"})
        rep.entries.push_back({id, false, "not evaluated: the tree or its anchors are malformed", ""});
      return rep;
    }
    rep.entries.push_back(a4());
    rep.entries.push_back(a5());
    rep.entries.push_back(a6());
    rep.entries.push_back(a7());
    rep.entries.push_back(a8());
    rep.entries.push_back(a9());
    return rep;
  }

 private:
  bool is_double() const { return d_.boundaries.size() == 2; }

  long long genus_numerator() const {
    long long n = d_.r;
    if (is_double()) return n - d_.boundaries[0].type.m - d_.boundaries[1].type.m;
    return n - d_.boundaries[0].type.m - 1;
  }

  AxiomResult a1() {
    Collector c("A1");
    if (d_.r < 0) c.fail("r", "branch count r=" + std::to_string(d_.r) + " is negative");
    for (const auto& b : d_.boundaries) {
      std::string where = is_double() ? (b.name == "end1" ? "boundary1" : "boundary2") : "boundary";
      if (auto problem = torsor::boundary_type_problem(b.type, ctx_.p)) c.fail(where, *problem);
    }
    long long n = genus_numerator();
    if (n < 0)
      c.fail("r", std::string(is_double() ? "r-m1-m2" : "r-m-1") + " = " + std::to_string(n) + " is negative");
    else if ((n * (ctx_.p - 1)) % 2 != 0)
      c.fail("r", "genus " + std::to_string(n) + "(p-1)/2 is not an integer");
    genus_ok_ = !c.failed();
    return c.result("type is consistent");
  }

  AxiomResult a2() {
    Collector c("A2");
    if (t_.vertices.empty()) c.fail("vertices", "the tree has no vertices");
    else if (auto problem = degdata::tree_problem(t_)) c.fail("edges", *problem);
    for (std::size_t v = 0; v < t_.vertices.size(); ++v)
      if (t_.vertices[v].genus != 0) c.fail(vpath(v), "components of a local tree are projective lines (genus 0)");
    structural_ok_ = t_.vertices.empty() ? false : !degdata::tree_problem(t_).has_value();
    return c.result("tree of projective lines");
  }

  AxiomResult a3() {
    Collector c("A3");
    for (const auto& b : d_.boundaries)
      if (b.anchor->vertex >= t_.vertices.size()) {
        c.fail(b.name, "anchor vertex " + std::to_string(b.anchor->vertex) + " is out of range");
        structural_ok_ = false;
      }
    for (std::size_t v = 0; v < pts_.size(); ++v) {
      bool concrete = degdata::rep_of(t_.vertices[v].torsor) != nullptr;
      std::set<arith::Place> seen;
      for (const auto& pt : pts_[v]) {
        if (concrete && !pt.location) c.fail(pt.path, "a vertex with a concrete representative needs located points");
        if (pt.location && !seen.insert(*pt.location).second)
          c.fail(pt.path, "location " + pt.location->to_string() + " is used twice on " + vpath(v));
      }
    }
    return c.result(is_double() ? "geodesic ends and points are well placed" : "origin and points are well placed");
  }

  AxiomResult a4() {
    Collector c("A4");
    for (std::size_t v = 0; v < t_.vertices.size(); ++v) {
      const auto& x = t_.vertices[v];
      auto kind = degdata::kind_of(x.torsor);
      if (!kind) {
        c.fail(vpath(v), "split vertices do not occur in local data");
        continue;
      }
      if (delta_in_range(ctx_, x.delta) && kind_from_delta(ctx_, x.delta) != *kind)
        c.fail(vpath(v), std::string("delta ") + std::to_string(x.delta) + " forces " +
                             torsor::kind_name(kind_from_delta(ctx_, x.delta)) + " but the torsor is " + torsor::kind_name(*kind));
      if (d_.species == Species::Split && !x.marked.empty() && *kind != GroupKind::Mult)
        c.fail(vpath(v), "split species: vertices with marked points carry a mult torsor");
      bool positive = false;
      for (const auto& pt : pts_[v]) {
        if (auto problem = label_problem(*kind, pt.label, pt.role, ctx_.p)) c.fail(pt.path, *problem);
        positive = positive || pt.label.m > 0;
      }
      if (*kind == GroupKind::Etale && !positive) c.fail(vpath(v), "etale torsor without a pole is trivial");
      if (auto problem = degree_problem(*kind, pts_[v], 0, ctx_.p)) c.fail(vpath(v), *problem);
      if (const auto* rep = degdata::rep_of(x.torsor))
        for (const auto& problem : representative_problems(*rep, *kind, pts_[v], ctx_.p, false)) c.fail(vpath(v), problem);
    }
    return c.result("every vertex torsor is admissible");
  }

  AxiomResult a5() {
    Collector c("A5");
    long long total = 0;
    for (std::size_t v = 0; v < t_.vertices.size(); ++v)
      for (std::size_t j = 0; j < t_.vertices[v].marked.size(); ++j) {
        const auto& mp = t_.vertices[v].marked[j];
        std::string where = vpath(v) + ".marked[" + std::to_string(j) + "]";
        total += mp.r;
        if (d_.species == Species::Split) {
          if (mp.r != 1 || mp.label != torsor::Label{-1, 0})
            c.fail(where, "split species: marked points have r=1 and label (-1,0)");
        } else if (mp.r != mp.label.m + 1 || mp.r < 1) {
          c.fail(where, "r=" + std::to_string(mp.r) + " but m+1=" + std::to_string(mp.label.m + 1));
        }
      }
    if (d_.species == Species::NonSplit && total != d_.r)
      c.fail("r", "r=" + std::to_string(d_.r) + " but the marked points carry " + std::to_string(total));
    for (const auto& b : d_.boundaries) {
      const auto& l = b.anchor->label;
      if (l.m + b.type.m != 0 || (l.h + b.type.h) % ctx_.p != 0)
        c.fail(b.name, "label " + label_str(l) + " does not match boundary " + degdata::boundary_key(b.type));
    }
    return c.result("marked points and boundary matching agree");
  }

  AxiomResult a6() {
    Collector c("A6");
    for (std::size_t i = 0; i < t_.edges.size(); ++i) {
      const auto& e = t_.edges[i];
      if (e.at_u.label.m + e.at_v.label.m != 0 || (e.at_u.label.h + e.at_v.label.h) % ctx_.p != 0)
        c.fail(epath(i), "half-labels " + label_str(e.at_u.label) + " and " + label_str(e.at_v.label) + " are not opposite");
    }
    return c.result("edge labels are antisymmetric");
  }

  AxiomResult a7() {
    Collector c("A7");
    const int p = ctx_.p;
    for (std::size_t v = 0; v < t_.vertices.size(); ++v) {
      const auto& x = t_.vertices[v];
      if (!degdata::is_split(x.torsor) && !delta_in_range(ctx_, x.delta))
        c.fail(vpath(v), "delta " + std::to_string(x.delta) + " outside [0," + std::to_string(ctx_.vKp) +
                             "] or not divisible by p-1");
    }
    auto thickness_ok = [&](int e, const std::string& where) {
      if (e > 0 && e % p == 0) return true;
      c.fail(where, "thickness e=" + std::to_string(e) + " is not a positive multiple of p");
      return false;
    };
    for (std::size_t i = 0; i < t_.edges.size(); ++i) {
      const auto& e = t_.edges[i];
      if (!thickness_ok(e.e, epath(i))) continue;
      const auto &xu = t_.vertices[e.u], &xv = t_.vertices[e.v];
      if (degdata::is_split(xu.torsor) || degdata::is_split(xv.torsor)) continue;
      int expected = delta_across(ctx_, xu.delta, e.at_u.label.m, e.e);
      if (xv.delta != expected)
        c.fail(epath(i), "delta jumps from " + std::to_string(xu.delta) + " to " + std::to_string(xv.delta) + ", ledger gives " +
                             std::to_string(expected));
    }
    for (const auto& b : d_.boundaries) {
      if (!thickness_ok(b.anchor->e, b.name)) continue;
      const auto& x = t_.vertices[b.anchor->vertex];
      if (degdata::is_split(x.torsor)) continue;
      int db = delta_across(ctx_, x.delta, b.anchor->label.m, b.anchor->e);
      if (!delta_in_range(ctx_, db))
        c.fail(b.name, "boundary delta " + std::to_string(db) + " is out of range");
      else if (kind_from_delta(ctx_, db) != b.type.kind)
        c.fail(b.name, "boundary delta " + std::to_string(db) + " gives " + torsor::kind_name(kind_from_delta(ctx_, db)) +
                           " but the type says " + torsor::kind_name(b.type.kind));
    }
    if (c.failed()) return c.result("");
    return c.result("different ledger holds on every edge and boundary; summed identity " +
                    std::string(summed_identity_holds() ? "holds" : "FAILS") + " at every vertex");
  }

  // |D_i| delta_i = sum over neighbours j (delta_j + t m_{i,j} (p-1)), with m read on the neighbour side.
  bool summed_identity_holds() const {
    std::vector<long long> lhs(t_.vertices.size(), 0), rhs(t_.vertices.size(), 0);
    auto add = [&](std::size_t v, int dv, int far_delta, int far_m, int e) {
      lhs[v] += dv;
      rhs[v] += delta_across(ctx_, far_delta, far_m, e);
    };
    for (const auto& e : t_.edges) {
      const auto &xu = t_.vertices[e.u], &xv = t_.vertices[e.v];
      if (degdata::is_split(xu.torsor) || degdata::is_split(xv.torsor)) continue;
      add(e.u, xu.delta, xv.delta, e.at_v.label.m, e.e);
      add(e.v, xv.delta, xu.delta, e.at_u.label.m, e.e);
    }
    for (const auto& b : d_.boundaries) {
      const auto& x = t_.vertices[b.anchor->vertex];
      int db = delta_across(ctx_, x.delta, b.anchor->label.m, b.anchor->e);
      add(b.anchor->vertex, x.delta, db, b.type.m, b.anchor->e);
    }
    return lhs == rhs;
  }

  AxiomResult a8() {
    Collector c("A8");
    if (!genus_ok_) {
      c.fail("r", "genus of the type is undefined (see A1)");
      return c.result("");
    }
    long long lhs2 = genus_numerator() * (ctx_.p - 1);
    long long rhs2 = deg8_rhs_twice(ctx_, t_, anchors());
    if (lhs2 != rhs2)
      c.fail("tree", "type genus " + std::to_string(lhs2 / 2) + " but the etale vertices account for " +
                         (rhs2 % 2 ? std::to_string(rhs2) + "/2" : std::to_string(rhs2 / 2)));
    return c.result("genus " + std::to_string(lhs2 / 2) + " on both sides");
  }

  AxiomResult a9() {
    Collector c("A9");
    for (std::size_t i = 0; i < t_.edges.size(); ++i) {
      const auto& e = t_.edges[i];
      const auto &xu = t_.vertices[e.u], &xv = t_.vertices[e.v];
      bool su = e.at_u.label == torsor::Label{0, 0} && !radicial_vertex(xu);
      bool sv = e.at_v.label == torsor::Label{0, 0} && !radicial_vertex(xv);
      if (su != sv) c.fail(epath(i), "one side splits into p points and the other does not");
    }
    for (std::size_t v = 0; v < pts_.size(); ++v) {
      if (!radicial_vertex(t_.vertices[v])) continue;
      for (const auto& pt : pts_[v])
        if (pt.label == torsor::Label{0, 0}) c.fail(pt.path, "label (0,0) on a radicial vertex cannot split");
    }
    return c.result("splitting agrees across every edge");
  }

  std::vector<Anchor> anchors() const {
    std::vector<Anchor> out;
    for (const auto& b : d_.boundaries) out.push_back(*b.anchor);
    return out;
  }

  const PrimeContext& ctx_;
  const LocalView& d_;
  const Tree& t_;
  std::vector<std::vector<SpecialPoint>> pts_;
  bool genus_ok_ = false;
  bool structural_ok_ = true;
};

}  // namespace

int deg8_rhs_twice(const PrimeContext& ctx, const Tree& t, const std::vector<Anchor>& anchors) {
  std::vector<long long> sum(t.vertices.size(), -2);
  auto add = [&](std::size_t v, const torsor::Label& l) {
    if (v < sum.size()) sum[v] += l.m + 1;
  };
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    for (const auto& mp : t.vertices[v].marked) add(v, mp.label);
  for (const auto& e : t.edges) {
    add(e.u, e.at_u.label);
    add(e.v, e.at_v.label);
  }
  for (const auto& a : anchors) add(a.vertex, a.label);
  long long total = 0;
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    if (degdata::kind_of(t.vertices[v].torsor) == GroupKind::Etale) total += sum[v] * (ctx.p - 1);
  return static_cast<int>(total);
}

ValidationReport check_simple(const PrimeContext& ctx, const SimpleDegData& d) {
  LocalView view{d.species, d.r, &d.tree, {{"origin", &d.origin, d.boundary}}};
  return LocalChecker(ctx, view).run();
}

ValidationReport check_double(const PrimeContext& ctx, const DoubleDegData& d) {
  LocalView view{d.species, d.r, &d.tree, {{"end1", &d.end1, d.boundary1}, {"end2", &d.end2, d.boundary2}}};
  return LocalChecker(ctx, view).run();
}

}  // namespace degp::validate
