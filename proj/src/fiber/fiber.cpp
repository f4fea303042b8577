#include "degp/fiber/fiber.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "degp/validate/validate.hpp"

namespace degp::fiber {

using degdata::Anchor;
using degdata::Tree;
using torsor::GroupKind;

std::vector<std::size_t> connected_components(std::size_t vertices, const std::vector<FiberEdge>& edges) {
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::map<std::size_t, std::size_t> index;
  std::vector<std::size_t> out(vertices);
  for (std::size_t v = 0; v < vertices; ++v) out[v] = index.emplace(find(v), index.size()).first->second;
  return out;
}

int betti_number(std::size_t vertices, const std::vector<FiberEdge>& edges) {
  auto cc = connected_components(vertices, edges);
  std::size_t count = vertices ? *std::max_element(cc.begin(), cc.end()) + 1 : 0;
  return static_cast<int>(edges.size()) - static_cast<int>(vertices) + static_cast<int>(count);
}

int CurveFragment::genus_sum() const {
  int s = 0;
  for (const auto& c : components) s += c.genus;
  return s;
}

int CurveFragment::b1() const { return betti_number(components.size(), edges); }

VertexRealization realize_vertex(const PrimeContext& ctx, const degdata::VertexTorsor& torsor, int base_genus,
                                 const std::vector<Label>& incident, const std::string& id) {
  const int p = ctx.p;
  VertexRealization out;
  auto kind = degdata::kind_of(torsor);
  if (!kind) {
    std::vector<std::size_t> copies;
    for (int k = 0; k < p; ++k) {
      out.components.push_back({id + "#" + std::to_string(k), base_genus, id + " (split copy)"});
      copies.push_back(static_cast<std::size_t>(k));
    }
    out.preimages.assign(incident.size(), copies);
    return out;
  }
  int genus = base_genus;
  if (*kind == GroupKind::Etale) {
    long long twice = static_cast<long long>(p) * (2LL * base_genus - 2);
    for (const auto& l : incident)
      if (l.m > 0) twice += static_cast<long long>(l.m + 1) * (p - 1);
    if (twice < -2 || twice % 2 != 0)
      throw RealizationError(id, "etale cover would have genus " + std::to_string(twice + 2) + "/2");
    genus = static_cast<int>((twice + 2) / 2);
  }
  out.components.push_back({id, genus, id + " (" + torsor::kind_name(*kind) + ")"});
  for (const auto& l : incident) {
    bool splits = *kind == GroupKind::Etale && l == Label{0, 0};
    out.preimages.push_back(std::vector<std::size_t>(splits ? p : 1, 0));
  }
  return out;
}

namespace {

// Appends `part` to `into`, returning the index offset.
std::size_t append(std::vector<FiberComponent>& into, const std::vector<FiberComponent>& part) {
  std::size_t offset = into.size();
  into.insert(into.end(), part.begin(), part.end());
  return offset;
}

std::vector<std::size_t> shifted(std::vector<std::size_t> v, std::size_t offset) {
  for (auto& x : v) x += offset;
  return v;
}

void glue(std::vector<FiberEdge>& edges, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
          const std::string& where) {
  if (a.size() != b.size())
    throw RealizationError(where, "attachment counts disagree (" + std::to_string(a.size()) + " against " +
                                      std::to_string(b.size()) + ")");
  for (std::size_t k = 0; k < a.size(); ++k) edges.emplace_back(a[k], b[k]);
}

CurveFragment realize_tree(const PrimeContext& ctx, const Tree& t, const std::vector<const Anchor*>& anchors) {
  if (auto problem = degdata::tree_problem(t)) throw RealizationError("edges", *problem);
  struct Slot {
    std::vector<Label> labels;
    // ('m', 0) marked point, ('e', 2 * edge + side) half-edge, ('a', index) anchor
    std::vector<std::pair<char, std::size_t>> owners;
  };
  std::vector<Slot> slots(t.vertices.size());
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    for (const auto& mp : t.vertices[v].marked) {
      slots[v].labels.push_back(mp.label);
      slots[v].owners.emplace_back('m', 0);
    }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    slots[t.edges[i].u].labels.push_back(t.edges[i].at_u.label);
    slots[t.edges[i].u].owners.emplace_back('e', 2 * i);
    slots[t.edges[i].v].labels.push_back(t.edges[i].at_v.label);
    slots[t.edges[i].v].owners.emplace_back('e', 2 * i + 1);
  }
  for (std::size_t j = 0; j < anchors.size(); ++j) {
    if (anchors[j]->vertex >= t.vertices.size()) throw RealizationError("anchor", "vertex out of range");
    slots[anchors[j]->vertex].labels.push_back(anchors[j]->label);
    slots[anchors[j]->vertex].owners.emplace_back('a', j);
  }

  CurveFragment f;
  std::vector<std::vector<std::size_t>> edge_pre(2 * t.edges.size());
  f.boundaries.resize(anchors.size());
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const auto& x = t.vertices[v];
    auto real = realize_vertex(ctx, x.torsor, x.genus, slots[v].labels, "v" + std::to_string(v));
    std::size_t offset = append(f.components, real.components);
    for (std::size_t k = 0; k < slots[v].owners.size(); ++k) {
      auto [tag, idx] = slots[v].owners[k];
      if (tag == 'e') edge_pre[idx] = shifted(real.preimages[k], offset);
      if (tag == 'a') f.boundaries[idx] = shifted(real.preimages[k], offset);
    }
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    glue(f.edges, edge_pre[2 * i], edge_pre[2 * i + 1], "edges[" + std::to_string(i) + "]");
  return f;
}

bool splits_at(const degdata::VertexTorsor& t, const Label& l) {
  auto k = degdata::kind_of(t);
  return (!k || *k == GroupKind::Etale) && l == Label{0, 0};
}

}  // namespace

CurveFragment realize_simple(const PrimeContext& ctx, const SimpleDegData& d) { return realize_tree(ctx, d.tree, {&d.origin}); }

CurveFragment realize_double(const PrimeContext& ctx, const DoubleDegData& d) {
  return realize_tree(ctx, d.tree, {&d.end1, &d.end2});
}

namespace {

struct Assembly {
  std::vector<FiberComponent> components;
  std::vector<FiberEdge> edges;
  std::vector<Diagnostic> diagnostics;
};

Assembly assemble(const PrimeContext& ctx, const GlobalDegData& g) {
  Assembly as;
  std::map<degdata::PointRef, std::vector<std::size_t>> pre;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    std::vector<Label> labels;
    for (const auto& pt : comp.points) labels.push_back(pt.label);
    auto real = realize_vertex(ctx, comp.torsor, comp.genus, labels, comp.id);
    std::size_t offset = append(as.components, real.components);
    for (std::size_t j = 0; j < comp.points.size(); ++j) pre[{c, j}] = shifted(real.preimages[j], offset);
  }
  auto preimages = [&](const degdata::PointRef& r, const std::string& where) -> const std::vector<std::size_t>& {
    auto it = pre.find(r);
    if (it == pre.end()) throw RealizationError(where, "point reference out of range");
    return it->second;
  };
  auto attach = [&](CurveFragment f, const std::string& where, int type_genus) {
    for (auto& c : f.components) {
      c.provenance = where + "/" + c.id;
      c.id = where + "/" + c.id;
    }
    std::size_t offset = append(as.components, f.components);
    for (auto [a, b] : f.edges) as.edges.emplace_back(a + offset, b + offset);
    if (f.arithmetic_genus() != type_genus)
      as.diagnostics.push_back({where, "realized fragment has genus " + std::to_string(f.arithmetic_genus()) +
                                           " but its type has genus " + std::to_string(type_genus)});
    std::vector<std::vector<std::size_t>> out;
    for (const auto& b : f.boundaries) out.push_back(shifted(b, offset));
    return out;
  };
  auto type_genus = [&](auto compute) {
    try {
      return compute();
    } catch (const validate::GenusError&) {
      return -1;
    }
  };

  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const auto& pa = preimages(n.a, where + ".a");
    const auto& pb = preimages(n.b, where + ".b");
    bool split = splits_at(g.components[n.a.component].torsor, g.point(n.a).label) &&
                 splits_at(g.components[n.b.component].torsor, g.point(n.b).label);
    if (!n.datum) {
      if (!split) throw RealizationError(where, "a type-only stub cannot be realized");
      glue(as.edges, pa, pb, where);
      continue;
    }
    const auto& d = *n.datum;
    int tg = type_genus([&] { return validate::genus_double(ctx, d.r, d.boundary1.m, d.boundary2.m); });
    auto bounds = attach(realize_double(ctx, d), where, tg);
    glue(as.edges, pa, bounds[0], where + ".a");
    glue(as.edges, pb, bounds[1], where + ".b");
  }
  for (std::size_t i = 0; i < g.marked.size(); ++i) {
    const auto& mk = g.marked[i];
    const std::string where = "marked[" + std::to_string(i) + "]";
    if (!mk.datum) throw RealizationError(where, "a type-only stub cannot be realized");
    int tg = type_genus([&] { return validate::genus_simple(ctx, mk.datum->r, mk.datum->boundary.m); });
    auto bounds = attach(realize_simple(ctx, *mk.datum), where, tg);
    glue(as.edges, preimages(mk.at, where), bounds[0], where);
  }
  for (std::size_t i = 0; i < g.critical.size(); ++i) {
    const auto& cr = g.critical[i];
    const std::string where = "critical[" + std::to_string(i) + "]";
    if (!cr.datum) throw RealizationError(where, "a type-only stub cannot be realized");
    int tg = type_genus([&] { return validate::genus_simple(ctx, cr.datum->r, cr.datum->boundary.m); });
    auto bounds = attach(realize_simple(ctx, *cr.datum), where, tg);
    glue(as.edges, preimages(cr.at, where), bounds[0], where);
  }
  return as;
}

}  // namespace

SpecialFiber realize_global(const PrimeContext& ctx, const GlobalDegData& g) {
  auto as = assemble(ctx, g);
  SpecialFiber s;
  s.components = std::move(as.components);
  s.edges = std::move(as.edges);
  s.b1 = betti_number(s.components.size(), s.edges);
  auto cc = connected_components(s.components.size(), s.edges);
  s.connected = s.components.empty() ? 0 : static_cast<int>(*std::max_element(cc.begin(), cc.end()) + 1);
  s.total_genus = s.b1;
  for (const auto& c : s.components) s.total_genus += c.genus;
  return s;
}

ConservationResult conservation_check(const PrimeContext& ctx, const GlobalDegData& g) {
  ConservationResult res;
  auto as = assemble(ctx, g);
  res.diagnostics = as.diagnostics;

  std::vector<FiberEdge> base_edges;
  for (const auto& n : g.nodes) base_edges.emplace_back(n.a.component, n.b.component);
  long long gX = betti_number(g.components.size(), base_edges);
  for (const auto& c : g.components) gX += c.genus;

  // per upstairs connected component: sum of genera plus its own b1
  auto cc = connected_components(as.components.size(), as.edges);
  std::size_t count = as.components.empty() ? 0 : *std::max_element(cc.begin(), cc.end()) + 1;
  std::vector<long long> genus(count, 1);
  for (std::size_t v = 0; v < as.components.size(); ++v) genus[cc[v]] += as.components[v].genus - 1;
  for (auto [a, b] : as.edges) genus[cc[a]] += 1;
  res.connected = static_cast<int>(count);

  if (count == 1) {
    long long twice = ctx.p * (2 * gX - 2) + static_cast<long long>(g.r) * (ctx.p - 1);
    res.realized = static_cast<int>(genus[0]);
    if (twice % 2 != 0) {
      res.diagnostics.push_back({"r", "2g-2 = " + std::to_string(twice) + " is odd"});
      res.expected = -1;
    } else {
      res.expected = static_cast<int>((twice + 2) / 2);
    }
  } else if (count == static_cast<std::size_t>(ctx.p)) {
    // a split cover: every copy maps isomorphically onto the base
    res.expected = static_cast<int>(gX);
    res.realized = static_cast<int>(genus[0]);
    for (std::size_t k = 0; k < count; ++k)
      if (genus[k] != gX) {
        res.realized = static_cast<int>(genus[k]);
        res.diagnostics.push_back({"copy " + std::to_string(k), "split copy has genus " + std::to_string(genus[k])});
      }
  } else {
    res.expected = static_cast<int>(gX);
    res.realized = -1;
    res.diagnostics.push_back({"fiber", std::to_string(count) + " connected components; a degree-p cover has 1 or p"});
  }
  res.ok = res.expected >= 0 && res.expected == res.realized && res.diagnostics.empty();
  return res;
}

namespace {

nlohmann::json components_json(const std::vector<FiberComponent>& cs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : cs) out.push_back({{"id", c.id}, {"genus", c.genus}, {"provenance", c.provenance}});
  return out;
}

nlohmann::json edges_json(const std::vector<FiberComponent>& cs, const std::vector<FiberEdge>& es) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [a, b] : es) out.push_back({cs[a].id, cs[b].id});
  return out;
}

std::string dot(const std::vector<FiberComponent>& cs, const std::vector<FiberEdge>& es, const std::string& title, int b1,
                int total, const std::vector<std::vector<std::size_t>>& boundaries = {}) {
  std::ostringstream os;
  os << "graph \"" << title << "\" {\n";
  os << "  // b1=" << b1 << " total_genus=" << total << "\n";
  for (const auto& c : cs) os << "  \"" << c.id << "\" [shape=circle, label=\"" << c.id << ":" << c.genus << "\"];\n";
  for (auto [a, b] : es) os << "  \"" << cs[a].id << "\" -- \"" << cs[b].id << "\";\n";
  for (std::size_t i = 0; i < boundaries.size(); ++i)
    for (std::size_t k = 0; k < boundaries[i].size(); ++k) {
      const std::string name = "boundary" + std::to_string(i + 1) + "." + std::to_string(k);
      os << "  \"" << name << "\" [shape=diamond, label=\"\"];\n";
      os << "  \"" << cs[boundaries[i][k]].id << "\" -- \"" << name << "\" [style=dashed];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace

nlohmann::json to_json(const CurveFragment& f) {
  nlohmann::json bounds = nlohmann::json::array();
  for (const auto& b : f.boundaries) {
    nlohmann::json ids = nlohmann::json::array();
    for (auto i : b) ids.push_back(f.components[i].id);
    bounds.push_back(ids);
  }
  return {{"components", components_json(f.components)},
          {"edges", edges_json(f.components, f.edges)},
          {"boundaries", bounds},
          {"b1", f.b1()},
          {"genus", f.arithmetic_genus()}};
}

nlohmann::json to_json(const SpecialFiber& s) {
  return {{"components", components_json(s.components)},
          {"edges", edges_json(s.components, s.edges)},
          {"b1", s.b1},
          {"total_genus", s.total_genus},
          {"connected_components", s.connected}};
}

std::string to_dot(const SpecialFiber& s) { return dot(s.components, s.edges, "special fiber", s.b1, s.total_genus); }
std::string to_dot(const CurveFragment& f) {
  return dot(f.components, f.edges, "fragment", f.b1(), f.arithmetic_genus(), f.boundaries);
}

}  // namespace degp::fiber
