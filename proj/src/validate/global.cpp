#include <map>
#include <numeric>
#include <set>

#include "degp/degdata/encode.hpp"
#include "rules.hpp"

namespace degp::validate {

using namespace detail;
using degdata::Component;
using degdata::PointRef;

namespace {

enum class Use { Node, Marked, Critical };

std::string cpath(std::size_t c) { return "components[" + std::to_string(c) + "]"; }
std::string ppath(const PointRef& r) { return cpath(r.component) + ".points[" + std::to_string(r.point) + "]"; }

/// Different degree of the boundary `which` of local data, derived from its anchor.
std::optional<int> boundary_delta(const PrimeContext& ctx, const degdata::Tree& t, const degdata::Anchor& a) {
  if (a.vertex >= t.vertices.size() || degdata::is_split(t.vertices[a.vertex].torsor) || a.e <= 0) return std::nullopt;
  return delta_across(ctx, t.vertices[a.vertex].delta, a.label.m, a.e);
}

class GlobalChecker {
 public:
  GlobalChecker(const PrimeContext& ctx, const GlobalDegData& g) : ctx_(ctx), g_(g) {}

  ValidationReport run() {
    ValidationReport rep;
    rep.entries.push_back(g1());
    if (!structural_ok_) {
      for (const char* id : {"G2", "G3", "G4", "G5", "G6", "G7", "G8"})
        rep.entries.push_back({id, false, "not evaluated: point references are malformed", ""});
      return rep;
    }
    rep.entries.push_back(g2());
    rep.entries.push_back(g3());
    rep.entries.push_back(g4());
    rep.entries.push_back(g5());
    rep.entries.push_back(g6());
    rep.entries.push_back(g7());
    rep.entries.push_back(g8());
    return rep;
  }

 private:
  bool ref_ok(const PointRef& r) const {
    return r.component < g_.components.size() && r.point < g_.components[r.component].points.size();
  }
  const Component& comp(const PointRef& r) const { return g_.components[r.component]; }
  std::optional<GroupKind> kind(const PointRef& r) const { return degdata::kind_of(comp(r).torsor); }
  torsor::Label label(const PointRef& r) const { return g_.point(r).label; }

  AxiomResult g1() {
    Collector c("G1");
    if (g_.components.empty()) c.fail("components", "no components");
    for (std::size_t i = 0; i < g_.components.size(); ++i)
      if (g_.components[i].genus < 0) c.fail(cpath(i), "negative genus");
    auto use = [&](const PointRef& r, Use u, const std::string& where) {
      if (!ref_ok(r)) {
        c.fail(where, "point reference out of range");
        structural_ok_ = false;
        return;
      }
      if (!uses_.emplace(r, u).second) c.fail(where, ppath(r) + " carries more than one attachment");
    };
    for (std::size_t i = 0; i < g_.nodes.size(); ++i) {
      std::string w = "nodes[" + std::to_string(i) + "]";
      use(g_.nodes[i].a, Use::Node, w + ".a");
      use(g_.nodes[i].b, Use::Node, w + ".b");
      if (g_.nodes[i].a == g_.nodes[i].b) c.fail(w, "both branches of the node are the same point");
    }
    for (std::size_t i = 0; i < g_.marked.size(); ++i) use(g_.marked[i].at, Use::Marked, "marked[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < g_.critical.size(); ++i)
      use(g_.critical[i].at, Use::Critical, "critical[" + std::to_string(i) + "]");
    if (structural_ok_ && !g_.components.empty()) {
      std::vector<std::size_t> parent(g_.components.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& n : g_.nodes) parent[find(n.a.component)] = find(n.b.component);
      for (std::size_t i = 1; i < g_.components.size(); ++i)
        if (find(i) != find(0)) c.fail(cpath(i), "the base curve is not connected");
    }
    return c.result("base curve is a connected nodal curve");
  }

  std::vector<SpecialPoint> points_of(std::size_t ci) const {
    std::vector<SpecialPoint> pts;
    const auto& comp = g_.components[ci];
    for (std::size_t j = 0; j < comp.points.size(); ++j) {
      PointRef r{ci, j};
      auto it = uses_.find(r);
      Role role = it == uses_.end() ? Role::Point : it->second == Use::Marked ? Role::Marked : Role::Point;
      pts.push_back({comp.points[j].label, comp.points[j].place, ppath(r), role});
    }
    return pts;
  }

  AxiomResult g2() {
    Collector c("G2");
    for (std::size_t ci = 0; ci < g_.components.size(); ++ci) {
      const auto& x = g_.components[ci];
      auto k = degdata::kind_of(x.torsor);
      if (!k) {
        for (std::size_t j = 0; j < x.points.size(); ++j)
          if (x.points[j].label != torsor::Label{0, 0}) c.fail(ppath({ci, j}), "points of a split component are labelled (0,0)");
        continue;
      }
      if (!delta_in_range(ctx_, x.delta))
        c.fail(cpath(ci), "delta " + std::to_string(x.delta) + " out of range");
      else if (kind_from_delta(ctx_, x.delta) != *k)
        c.fail(cpath(ci), std::string("delta forces ") + torsor::kind_name(kind_from_delta(ctx_, x.delta)) + " but the torsor is " +
                              torsor::kind_name(*k));
      auto pts = points_of(ci);
      for (const auto& pt : pts) {
        if (auto problem = label_problem(*k, pt.label, pt.role, ctx_.p)) c.fail(pt.path, *problem);
        if (torsor::is_radicial(*k) && pt.label == torsor::Label{0, 0})
          c.fail(pt.path, "label (0,0) on a radicial component cannot split");
      }
      if (auto problem = degree_problem(*k, pts, x.genus, ctx_.p)) c.fail(cpath(ci), *problem);
      if (const auto* rep = degdata::rep_of(x.torsor)) {
        if (x.genus != 0) c.fail(cpath(ci), "concrete representatives are supported on genus-0 components only");
        for (const auto& problem : representative_problems(*rep, *k, pts, ctx_.p, true)) c.fail(cpath(ci), problem);
      }
    }
    return c.result("every component torsor is admissible");
  }

  // Compares the declared boundary of attached data with the ambient label at `at`.
  void match_boundary(Collector& c, const std::string& where, const PointRef& at, const torsor::BoundaryType& b,
                      std::optional<int> derived_delta) {
    auto k = kind(at);
    if (!k) {
      c.fail(where, "attached to a split component");
      return;
    }
    torsor::BoundaryType ambient{*k, label(at).m, label(at).h};
    if (b != ambient)
      c.fail(where, "datum boundary " + degdata::boundary_key(b) + " but the component gives " + degdata::boundary_key(ambient));
    if (derived_delta && *derived_delta != comp(at).delta)
      c.fail(where, "datum boundary has delta " + std::to_string(*derived_delta) + " but the component has " +
                        std::to_string(comp(at).delta));
  }

  bool splits(const PointRef& r) const {
    auto k = kind(r);
    return (!k || !torsor::is_radicial(*k)) && label(r) == torsor::Label{0, 0};
  }

  AxiomResult g3() {
    Collector c("G3");
    for (std::size_t i = 0; i < g_.nodes.size(); ++i) {
      const auto& n = g_.nodes[i];
      std::string w = "nodes[" + std::to_string(i) + "]";
      bool sa = splits(n.a), sb = splits(n.b);
      if (sa != sb) {
        c.fail(w, "one branch splits into p points and the other does not");
        continue;
      }
      if (sa) {
        if (n.r != 0) c.fail(w, "a split node carries no branch points");
        if (n.datum) c.fail(w, "a split node carries no local datum");
        continue;
      }
      if (!n.datum) continue;  // stub: reported by recursive validation
      const auto& d = *n.datum;
      if (d.r != n.r)
        c.fail(w, "node has r=" + std::to_string(n.r) + " but its datum has r=" + std::to_string(d.r) + " (genus " +
                      genus_text(d) + ")");
      match_boundary(c, w + ".a", n.a, d.boundary1, boundary_delta(ctx_, d.tree, d.end1));
      match_boundary(c, w + ".b", n.b, d.boundary2, boundary_delta(ctx_, d.tree, d.end2));
    }
    return c.result("node data match the adjacent torsors");
  }

  std::string genus_text(const DoubleDegData& d) const {
    try {
      return std::to_string(genus_double(ctx_, d.r, d.boundary1.m, d.boundary2.m));
    } catch (const GenusError&) {
      return "undefined";
    }
  }

  AxiomResult g4() {
    Collector c("G4");
    for (std::size_t i = 0; i < g_.marked.size(); ++i) {
      const auto& mk = g_.marked[i];
      std::string w = "marked[" + std::to_string(i) + "]";
      if (!kind(mk.at)) {
        c.fail(w, "marked point on a split component");
        continue;
      }
      if (mk.r < 1) c.fail(w, "a marked point carries r >= 1");
      if (!mk.datum) continue;
      if (mk.datum->r != mk.r)
        c.fail(w, "marked point has r=" + std::to_string(mk.r) + " but its datum has r=" + std::to_string(mk.datum->r));
      match_boundary(c, w, mk.at, mk.datum->boundary, boundary_delta(ctx_, mk.datum->tree, mk.datum->origin));
    }
    return c.result("marked-point data match the ambient torsors");
  }

  AxiomResult g5() {
    Collector c("G5");
    std::map<PointRef, int> covered;
    for (std::size_t i = 0; i < g_.critical.size(); ++i) {
      const auto& cr = g_.critical[i];
      std::string w = "critical[" + std::to_string(i) + "]";
      ++covered[cr.at];
      auto k = kind(cr.at);
      if (!k || !torsor::is_radicial(*k) || label(cr.at).m > -2) {
        c.fail(w, ppath(cr.at) + " is not a zero of a radicial omega");
        continue;
      }
      if (!cr.datum) continue;
      if (cr.datum->r != 0) c.fail(w, "critical-point data have r=0");
      match_boundary(c, w, cr.at, cr.datum->boundary, boundary_delta(ctx_, cr.datum->tree, cr.datum->origin));
    }
    for (std::size_t ci = 0; ci < g_.components.size(); ++ci) {
      auto k = degdata::kind_of(g_.components[ci].torsor);
      if (!k || !torsor::is_radicial(*k)) continue;
      for (std::size_t j = 0; j < g_.components[ci].points.size(); ++j) {
        PointRef r{ci, j};
        if (label(r).m > -2) continue;
        auto u = uses_.find(r);
        if (u != uses_.end() && u->second != Use::Critical) continue;
        if (covered[r] != 1) c.fail(ppath(r), "zero of omega without critical-point datum");
      }
    }
    return c.result("critical-point data sit exactly at the free zeros of omega");
  }

  AxiomResult g6() {
    Collector c("G6");
    int total = g_.branch_total();
    if (total != g_.r)
      c.fail("r", "r=" + std::to_string(g_.r) + " but nodes and marked points carry " + std::to_string(total));
    return c.result("branch ledger r=" + std::to_string(g_.r));
  }

  template <class Data>
  void recurse(Collector& c, const std::string& where, const std::optional<Data>& d) {
    if (!d) {
      c.fail(where, "local datum missing (type-only stub)");
      return;
    }
    ValidationReport sub;
    if constexpr (std::is_same_v<Data, SimpleDegData>)
      sub = check_simple(ctx_, *d);
    else
      sub = check_double(ctx_, *d);
    for (const auto& a : sub.entries)
      if (!a.pass) c.fail(where + ".datum/" + a.id + (a.location.empty() ? "" : ":" + a.location), a.message);
  }

  AxiomResult g7() {
    Collector c("G7");
    for (std::size_t i = 0; i < g_.nodes.size(); ++i)
      if (!splits(g_.nodes[i].a) || !splits(g_.nodes[i].b)) recurse(c, "nodes[" + std::to_string(i) + "]", g_.nodes[i].datum);
    for (std::size_t i = 0; i < g_.marked.size(); ++i) recurse(c, "marked[" + std::to_string(i) + "]", g_.marked[i].datum);
    for (std::size_t i = 0; i < g_.critical.size(); ++i) recurse(c, "critical[" + std::to_string(i) + "]", g_.critical[i].datum);
    return c.result("every attached local datum is valid");
  }

  AxiomResult g8() {
    Collector c("G8");
    for (std::size_t ci = 0; ci < g_.components.size(); ++ci) {
      const auto& x = g_.components[ci];
      auto k = degdata::kind_of(x.torsor);
      if (!x.generic || !k || !torsor::is_radicial(*k)) continue;
      const int order = ctx_.p == 2 ? 2 : 1;
      long long poles = 0, zeros = 0;
      for (std::size_t j = 0; j < x.points.size(); ++j) {
        const auto& l = x.points[j].label;
        if (l.m >= 0) poles += l.m + 1;
        if (l.m <= -2) {
          if (-l.m - 1 != order)
            c.fail(ppath({ci, j}), "a generic component has only " + std::string(order == 1 ? "simple" : "double") + " zeros");
          ++zeros;
        }
      }
      long long expected = (2LL * x.genus - 2 + poles) / order;
      if (zeros != expected)
        c.fail(cpath(ci), std::to_string(zeros) + " zeros, a generic component of genus " + std::to_string(x.genus) + " has " +
                              std::to_string(expected));
    }
    return c.result("zero counts of generic components");
  }

  const PrimeContext& ctx_;
  const GlobalDegData& g_;
  std::map<PointRef, Use> uses_;
  bool structural_ok_ = true;
};

}  // namespace

ValidationReport check_global(const PrimeContext& ctx, const GlobalDegData& g) { return GlobalChecker(ctx, g).run(); }

}  // namespace degp::validate
