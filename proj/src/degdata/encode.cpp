#include "degp/degdata/encode.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace degp::degdata {

namespace {

std::string element_key(const arith::Fq& c) {
  std::string s;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) s += (i ? "." : "") + std::to_string(c.coeffs()[i]);
  return s;
}

std::string poly_key(const arith::Poly& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) s += (i ? "," : "") + element_key(f.coeffs()[i]);
  return s + "]";
}

class TreeEncoder {
 public:
  TreeEncoder(const Tree& t, std::map<std::size_t, std::string> anchors)
      : t_(t), adj_(adjacency(t)), anchors_(std::move(anchors)) {
    if (auto problem = tree_problem(t)) throw StructureError(*problem);
  }

  // Encoding of the subtree hanging at v, away from parent.
  std::string encode(std::size_t v, std::size_t parent) {
    const Vertex& x = t_.vertices[v];
    std::vector<std::string> marked;
    for (const auto& mp : x.marked)
      marked.push_back(label_key(mp.label) + ":" + std::to_string(mp.r) + "@" + place_key(mp.location));
    std::sort(marked.begin(), marked.end());
    std::string out = "{" + torsor_tag(x.torsor) + ";" + std::to_string(x.delta) + ";" + std::to_string(x.genus) + ";[";
    for (std::size_t i = 0; i < marked.size(); ++i) out += (i ? "," : "") + marked[i];
    out += "];" + torsor_key(x.torsor) + ";";
    if (auto it = anchors_.find(v); it != anchors_.end()) out += it->second;
    out += ";[";
    auto kids = children(v, parent);
    for (std::size_t i = 0; i < kids.size(); ++i) out += (i ? "," : "") + kids[i].first;
    return out + "]}";
  }

  // (encoding, child vertex), sorted by encoding.
  std::vector<std::pair<std::string, std::size_t>> children(std::size_t v, std::size_t parent) {
    std::vector<std::pair<std::string, std::size_t>> kids;
    for (auto [ei, w] : adj_[v]) {
      if (w == parent) continue;
      const Edge& e = t_.edges[ei];
      const HalfEdge& near = e.u == v ? e.at_u : e.at_v;
      const HalfEdge& far = e.u == v ? e.at_v : e.at_u;
      kids.emplace_back("(" + std::to_string(e.e) + ";" + label_key(near.label) + "@" + place_key(near.location) + ";" +
                            label_key(far.label) + "@" + place_key(far.location) + ";" + encode(w, v) + ")",
                        w);
    }
    std::sort(kids.begin(), kids.end());
    return kids;
  }

  void match(TreeEncoder& other, std::size_t v, std::size_t pv, std::size_t w, std::size_t pw, std::vector<std::size_t>& map) {
    map[v] = w;
    auto a = children(v, pv), b = other.children(w, pw);
    for (std::size_t i = 0; i < a.size(); ++i) match(other, a[i].second, v, b[i].second, w, map);
  }

 private:
  const Tree& t_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
  std::map<std::size_t, std::string> anchors_;
};

std::string anchor_key(const std::string& tag, const Anchor& a) {
  return tag + "(" + label_key(a.label) + "@" + place_key(a.location) + ";e=" + std::to_string(a.e) + ")";
}

std::map<std::size_t, std::string> double_anchors(const DoubleDegData& d) {
  std::map<std::size_t, std::string> anchors;
  anchors[d.end1.vertex] += anchor_key("x1", d.end1);
  anchors[d.end2.vertex] += anchor_key("x2", d.end2);
  return anchors;
}

std::string simple_header(const SimpleDegData& d) {
  return std::string("simple|") + species_name(d.species) + "|r=" + std::to_string(d.r) + "|" + boundary_key(d.boundary) + "|";
}

std::string double_header(const DoubleDegData& d) {
  return std::string("double|") + species_name(d.species) + "|r=" + std::to_string(d.r) + "|" + boundary_key(d.boundary1) +
         "|" + boundary_key(d.boundary2) + "|";
}

void check_index(const Tree& t, std::size_t v, const char* what) {
  if (v >= t.vertices.size()) throw StructureError(std::string(what) + " vertex " + std::to_string(v) + " is out of range");
}

}  // namespace

std::string label_key(const Label& l) { return std::to_string(l.m) + "/" + std::to_string(l.h); }

std::string place_key(const std::optional<Place>& z) { return z ? z->to_string() : "-"; }

std::string boundary_key(const BoundaryType& b) {
  return std::string(torsor::kind_name(b.kind)) + "(" + label_key({b.m, b.h}) + ")";
}

std::string rep_key(const TorsorRep& T) {
  std::string s = std::string(torsor::kind_name(T.kind())) + ":F" + std::to_string(T.rep().field()->degree()) + ":" +
                  poly_key(T.rep().num()) + "/" + poly_key(T.rep().den()) + ":{";
  for (std::size_t i = 0; i < T.punctures().size(); ++i) s += (i ? "," : "") + T.punctures()[i].to_string();
  return s + "}";
}

std::string torsor_key(const VertexTorsor& t) {
  if (auto* r = rep_of(t)) return rep_key(*r);
  return "-";
}

std::string canonical_encode(const SimpleDegData& d) {
  check_index(d.tree, d.origin.vertex, "origin");
  TreeEncoder enc(d.tree, {{d.origin.vertex, anchor_key("x", d.origin)}});
  return simple_header(d) + enc.encode(d.origin.vertex, SIZE_MAX);
}

std::string canonical_encode(const DoubleDegData& d) {
  check_index(d.tree, d.end1.vertex, "end1");
  check_index(d.tree, d.end2.vertex, "end2");
  TreeEncoder enc(d.tree, double_anchors(d));
  return double_header(d) + enc.encode(d.end1.vertex, SIZE_MAX);
}

bool is_isomorphic(const SimpleDegData& a, const SimpleDegData& b) {
  if (a.species != b.species || a.r != b.r || a.boundary != b.boundary)
    throw StructureError("isomorphism test between data of different species or type");
  return canonical_encode(a) == canonical_encode(b);
}

bool is_isomorphic(const DoubleDegData& a, const DoubleDegData& b) {
  if (a.species != b.species || a.r != b.r || a.boundary1 != b.boundary1 || a.boundary2 != b.boundary2)
    throw StructureError("isomorphism test between data of different species or type");
  return canonical_encode(a) == canonical_encode(b);
}

std::optional<std::vector<std::size_t>> isomorphism_witness(const SimpleDegData& a, const SimpleDegData& b) {
  if (!is_isomorphic(a, b)) return std::nullopt;
  TreeEncoder ea(a.tree, {{a.origin.vertex, anchor_key("x", a.origin)}});
  TreeEncoder eb(b.tree, {{b.origin.vertex, anchor_key("x", b.origin)}});
  std::vector<std::size_t> map(a.tree.vertices.size());
  ea.match(eb, a.origin.vertex, SIZE_MAX, b.origin.vertex, SIZE_MAX, map);
  return map;
}

std::optional<std::vector<std::size_t>> isomorphism_witness(const DoubleDegData& a, const DoubleDegData& b) {
  if (!is_isomorphic(a, b)) return std::nullopt;
  TreeEncoder ea(a.tree, double_anchors(a));
  TreeEncoder eb(b.tree, double_anchors(b));
  std::vector<std::size_t> map(a.tree.vertices.size());
  ea.match(eb, a.end1.vertex, SIZE_MAX, b.end1.vertex, SIZE_MAX, map);
  return map;
}

std::string canonical_encode(const GlobalDegData& g) {
  auto point_key = [&](const PointRef& ref) {
    if (ref.component >= g.components.size() || ref.point >= g.components[ref.component].points.size())
      throw StructureError("point reference out of range");
    const auto& c = g.components[ref.component];
    const auto& pt = c.points[ref.point];
    return c.id + "." + (pt.place ? pt.place->to_string() : "name:" + pt.name);
  };
  std::vector<std::string> comps;
  for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
    const auto& c = g.components[ci];
    std::vector<std::string> pts;
    for (std::size_t pi = 0; pi < c.points.size(); ++pi)
      pts.push_back(point_key({ci, pi}) + "=" + label_key(c.points[pi].label));
    std::sort(pts.begin(), pts.end());
    std::string s = c.id + "{" + std::to_string(c.genus) + ";" + (c.generic ? "generic" : "special") + ";" + torsor_tag(c.torsor) +
                    ";" + torsor_key(c.torsor) + ";" + std::to_string(c.delta) + ";[";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + pts[i];
    comps.push_back(s + "]}");
  }
  std::sort(comps.begin(), comps.end());

  std::vector<std::string> nodes;
  for (const auto& n : g.nodes) {
    std::string a = point_key(n.a), b = point_key(n.b);
    // a node is unordered; orient it by its endpoint keys and the datum with it
    std::string datum = n.datum ? canonical_encode(*n.datum) : "stub";
    if (b < a && n.datum) {
      DoubleDegData flipped = *n.datum;
      std::swap(flipped.boundary1, flipped.boundary2);
      std::swap(flipped.end1, flipped.end2);
      datum = canonical_encode(flipped);
    }
    if (b < a) std::swap(a, b);
    nodes.push_back("<" + a + "~" + b + ";r=" + std::to_string(n.r) + ";" + datum + ">");
  }
  std::sort(nodes.begin(), nodes.end());

  std::vector<std::string> marked;
  for (const auto& m : g.marked)
    marked.push_back("<" + point_key(m.at) + ";r=" + std::to_string(m.r) + ";" + (m.datum ? canonical_encode(*m.datum) : "stub") + ">");
  std::sort(marked.begin(), marked.end());

  std::vector<std::string> critical;
  for (const auto& c : g.critical)
    critical.push_back("<" + point_key(c.at) + ";" + (c.datum ? canonical_encode(*c.datum) : "stub") + ">");
  std::sort(critical.begin(), critical.end());

  std::ostringstream os;
  os << "global|r=" << g.r << "|components[";
  for (std::size_t i = 0; i < comps.size(); ++i) os << (i ? "," : "") << comps[i];
  os << "]|nodes[";
  for (std::size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << nodes[i];
  os << "]|marked[";
  for (std::size_t i = 0; i < marked.size(); ++i) os << (i ? "," : "") << marked[i];
  os << "]|critical[";
  for (std::size_t i = 0; i < critical.size(); ++i) os << (i ? "," : "") << critical[i];
  os << "]";
  return os.str();
}

}  // namespace degp::degdata
