#include "degp/degdata/json_io.hpp"

#include <algorithm>
#include <map>

#include "degp/arith/numtheory.hpp"

namespace degp::degdata {

using arith::FieldRef;
using arith::Fq;
using arith::Poly;
using arith::RationalFunction;

ObjectReader::ObjectReader(const json& j, std::string path, std::initializer_list<const char*> required,
                           std::initializer_list<const char*> optional)
    : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw ParseError(path_, "expected an object");
  for (const char* k : required)
    if (!j_.contains(k)) throw ParseError(path_ + "." + k, "missing required field");
  for (auto it = j_.begin(); it != j_.end(); ++it) {
    const std::string& k = it.key();
    bool known = std::any_of(required.begin(), required.end(), [&](const char* r) { return k == r; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](const char* r) { return k == r; });
    if (!known) throw ParseError(path_ + "." + k, "unknown field");
  }
}

const json& ObjectReader::at(const char* key) const {
  if (!j_.contains(key)) throw ParseError(sub(key), "missing required field");
  return j_.at(key);
}

const json* ObjectReader::find(const char* key) const {
  auto it = j_.find(key);
  return it == j_.end() || it->is_null() ? nullptr : &*it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) throw ParseError(path, "integer out of range");
  return static_cast<int>(v);
}

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

int ObjectReader::get_int(const char* key) const { return as_int(at(key), sub(key)); }

int ObjectReader::get_int_or(const char* key, int fallback) const {
  const json* v = find(key);
  return v ? as_int(*v, sub(key)) : fallback;
}

bool ObjectReader::get_bool_or(const char* key, bool fallback) const {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ParseError(sub(key), "expected a boolean");
  return v->get<bool>();
}

std::string ObjectReader::get_string(const char* key) const {
  const json& v = at(key);
  if (!v.is_string()) throw ParseError(sub(key), "expected a string");
  return v.get<std::string>();
}

namespace {

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

Fq element_from_json(const json& j, FieldRef F, const std::string& path) {
  if (j.is_number_integer()) return Fq::from_int(F, j.get<std::int64_t>());
  as_array(j, path);
  if (j.size() != F->degree())
    throw ParseError(path, "field element needs " + std::to_string(F->degree()) + " coefficients, got " + std::to_string(j.size()));
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(static_cast<std::uint32_t>(arith::mod_floor(as_int(j[i], index_path(path, i)), F->p())));
  return Fq::from_coeffs(F, c);
}

json element_to_json(const Fq& c) { return json(c.coeffs()); }

Poly poly_from_json(const json& j, FieldRef F, const std::string& path) {
  as_array(j, path);
  std::vector<Fq> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(element_from_json(j[i], F, index_path(path, i)));
  return Poly(F, c);
}

json poly_to_json(const Poly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(element_to_json(c));
  return a;
}

FieldRef field_for(int p, int n, const std::string& path) {
  if (n < 1 || n > 24) throw ParseError(path, "field degree must be in [1, 24]");
  try {
    return arith::field_make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  } catch (const arith::ArithError& e) {
    throw ParseError(path, e.what());
  }
}

Label label_from(const ObjectReader& r, int p) {
  return {r.get_int("m"), static_cast<int>(arith::mod_floor(r.get_int("h"), p))};
}

std::optional<Place> optional_place(const ObjectReader& r, const char* key, int p) {
  const json* v = r.find(key);
  if (!v) return std::nullopt;
  return place_from_json(*v, p, r.sub(key));
}

std::size_t index_from(const ObjectReader& r, const char* key) {
  int v = r.get_int(key);
  if (v < 0) throw ParseError(r.sub(key), "vertex index must be nonnegative");
  return static_cast<std::size_t>(v);
}

Tree tree_from(const ObjectReader& r, int p) {
  Tree t;
  const json& vs = as_array(r.at("vertices"), r.sub("vertices"));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    ObjectReader vr(vs[i], index_path(r.sub("vertices"), i), {"torsor", "delta"}, {"genus", "marked"});
    Vertex v;
    v.torsor = torsor_from_json(vr.at("torsor"), p, vr.sub("torsor"));
    v.delta = vr.get_int("delta");
    v.genus = vr.get_int_or("genus", 0);
    if (const json* ms = vr.find("marked")) {
      as_array(*ms, vr.sub("marked"));
      for (std::size_t k = 0; k < ms->size(); ++k) {
        ObjectReader mr((*ms)[k], index_path(vr.sub("marked"), k), {"m", "h", "r"}, {"location"});
        v.marked.push_back({optional_place(mr, "location", p), label_from(mr, p), mr.get_int("r")});
      }
    }
    t.vertices.push_back(std::move(v));
  }
  const json& es = as_array(r.at("edges"), r.sub("edges"));
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string ep = index_path(r.sub("edges"), i);
    ObjectReader er(es[i], ep, {"u", "v", "e", "label_u", "label_v"}, {"location_u", "location_v"});
    Edge e;
    e.u = index_from(er, "u");
    e.v = index_from(er, "v");
    e.e = er.get_int("e");
    ObjectReader lu(er.at("label_u"), er.sub("label_u"), {"m", "h"});
    ObjectReader lv(er.at("label_v"), er.sub("label_v"), {"m", "h"});
    e.at_u = {label_from(lu, p), optional_place(er, "location_u", p)};
    e.at_v = {label_from(lv, p), optional_place(er, "location_v", p)};
    t.edges.push_back(e);
  }
  return t;
}

json tree_vertices_json(const Tree& t) {
  json vs = json::array();
  for (const auto& v : t.vertices) {
    json jv{{"torsor", torsor_to_json(v.torsor)}, {"delta", v.delta}, {"genus", v.genus}};
    json ms = json::array();
    for (const auto& m : v.marked) {
      json jm{{"m", m.label.m}, {"h", m.label.h}, {"r", m.r}};
      if (m.location) jm["location"] = place_to_json(*m.location);
      ms.push_back(jm);
    }
    jv["marked"] = ms;
    vs.push_back(jv);
  }
  return vs;
}

json tree_edges_json(const Tree& t) {
  json es = json::array();
  for (const auto& e : t.edges) {
    json je{{"u", e.u}, {"v", e.v}, {"e", e.e}, {"label_u", label_to_json(e.at_u.label)}, {"label_v", label_to_json(e.at_v.label)}};
    if (e.at_u.location) je["location_u"] = place_to_json(*e.at_u.location);
    if (e.at_v.location) je["location_v"] = place_to_json(*e.at_v.location);
    es.push_back(je);
  }
  return es;
}

Anchor anchor_from(const json& j, int p, const std::string& path) {
  ObjectReader r(j, path, {"vertex", "m", "h", "e"}, {"location"});
  Anchor a;
  a.vertex = index_from(r, "vertex");
  a.label = label_from(r, p);
  a.e = r.get_int("e");
  a.location = optional_place(r, "location", p);
  return a;
}

json anchor_to_json(const Anchor& a) {
  json j{{"vertex", a.vertex}, {"m", a.label.m}, {"h", a.label.h}, {"e", a.e}};
  if (a.location) j["location"] = place_to_json(*a.location);
  return j;
}

}  // namespace

json place_to_json(const Place& z) {
  if (z.is_infinity()) return "inf";
  return json{{"minpoly", z.minpoly()}, {"index", z.index()}};
}

Place place_from_json(const json& j, int p, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return Place::infinity();
    throw ParseError(path, "the only string place is \"inf\"");
  }
  if (!j.is_object()) throw ParseError(path, "expected a place");
  try {
    if (j.contains("coord")) {
      ObjectReader r(j, path, {"coord", "field_degree"});
      FieldRef F = field_for(p, r.get_int("field_degree"), r.sub("field_degree"));
      return Place::from_element(element_from_json(r.at("coord"), F, r.sub("coord")));
    }
    ObjectReader r(j, path, {"minpoly", "index"});
    const json& mp = as_array(r.at("minpoly"), r.sub("minpoly"));
    std::vector<std::uint32_t> coeffs;
    for (std::size_t i = 0; i < mp.size(); ++i)
      coeffs.push_back(static_cast<std::uint32_t>(arith::mod_floor(as_int(mp[i], index_path(r.sub("minpoly"), i)), p)));
    int idx = r.get_int("index");
    if (idx < 0) throw ParseError(r.sub("index"), "root index must be nonnegative");
    return Place::make(static_cast<std::uint32_t>(p), coeffs, static_cast<std::uint32_t>(idx));
  } catch (const arith::ArithError& e) {
    throw ParseError(path, e.what());
  }
}

json function_to_json(const RationalFunction& f) {
  return json{{"field_degree", f.field()->degree()}, {"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

RationalFunction function_from_json(const json& j, int p, const std::string& path) {
  ObjectReader r(j, path, {"field_degree", "num"}, {"den"});
  FieldRef F = field_for(p, r.get_int("field_degree"), r.sub("field_degree"));
  Poly num = poly_from_json(r.at("num"), F, r.sub("num"));
  Poly den = r.find("den") ? poly_from_json(*r.find("den"), F, r.sub("den")) : Poly::constant(Fq::from_int(F, 1));
  if (den.is_zero()) throw ParseError(r.sub("den"), "zero denominator");
  return RationalFunction(num, den);
}

json torsor_to_json(const VertexTorsor& t) {
  if (is_split(t)) return json{{"type", "split"}};
  if (auto* s = std::get_if<SymbolicTorsor>(&t)) return json{{"type", "symbolic"}, {"kind", torsor::kind_name(s->kind)}};
  const auto& T = std::get<TorsorRep>(t);
  json punct = json::array();
  for (const auto& z : T.punctures()) punct.push_back(place_to_json(z));
  return json{{"type", "rep"}, {"kind", torsor::kind_name(T.kind())}, {"rep", function_to_json(T.rep())}, {"punctures", punct}};
}

VertexTorsor torsor_from_json(const json& j, int p, const std::string& path) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) throw ParseError(path + ".type", "expected \"split\", \"symbolic\" or \"rep\"");
  const std::string type = j["type"].get<std::string>();
  if (type == "split") {
    ObjectReader r(j, path, {"type"});
    return SplitMarker{};
  }
  if (type == "symbolic") {
    ObjectReader r(j, path, {"type", "kind"});
    return SymbolicTorsor{kind_from_json(r.at("kind"), r.sub("kind"))};
  }
  if (type == "rep") {
    ObjectReader r(j, path, {"type", "kind", "rep"}, {"punctures"});
    GroupKind kind = kind_from_json(r.at("kind"), r.sub("kind"));
    RationalFunction f = function_from_json(r.at("rep"), p, r.sub("rep"));
    std::vector<Place> punct;
    if (const json* pj = r.find("punctures")) {
      as_array(*pj, r.sub("punctures"));
      for (std::size_t i = 0; i < pj->size(); ++i) punct.push_back(place_from_json((*pj)[i], p, index_path(r.sub("punctures"), i)));
    }
    try {
      return TorsorRep::make(kind, f, punct);
    } catch (const torsor::TorsorError& e) {
      throw ParseError(r.sub("rep"), e.what());
    }
  }
  throw ParseError(path + ".type", "unknown torsor type \"" + type + "\"");
}

json label_to_json(const Label& l) { return json{{"m", l.m}, {"h", l.h}}; }

json boundary_to_json(const BoundaryType& b) { return json{{"kind", torsor::kind_name(b.kind)}, {"m", b.m}, {"h", b.h}}; }

GroupKind kind_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a kind string");
  auto k = torsor::parse_kind(j.get<std::string>());
  if (!k) throw ParseError(path, "unknown kind \"" + j.get<std::string>() + "\" (etale, mult, add)");
  return *k;
}

BoundaryType boundary_from_json(const json& j, const std::string& path) {
  ObjectReader r(j, path, {"kind", "m", "h"});
  return {kind_from_json(r.at("kind"), r.sub("kind")), r.get_int("m"), r.get_int("h")};
}

Species species_from_json(const json& j, const std::string& path) {
  if (j == "split") return Species::Split;
  if (j == "nonsplit") return Species::NonSplit;
  throw ParseError(path, "species must be \"split\" or \"nonsplit\"");
}

json to_json(const SimpleDegData& d) {
  return json{{"species", species_name(d.species)}, {"r", d.r}, {"boundary", boundary_to_json(d.boundary)},
              {"vertices", tree_vertices_json(d.tree)}, {"edges", tree_edges_json(d.tree)}, {"origin", anchor_to_json(d.origin)}};
}

json to_json(const DoubleDegData& d) {
  return json{{"species", species_name(d.species)},
              {"r", d.r},
              {"boundary1", boundary_to_json(d.boundary1)},
              {"boundary2", boundary_to_json(d.boundary2)},
              {"vertices", tree_vertices_json(d.tree)},
              {"edges", tree_edges_json(d.tree)},
              {"end1", anchor_to_json(d.end1)},
              {"end2", anchor_to_json(d.end2)}};
}

SimpleDegData simple_from_json(const json& j, const PrimeContext& ctx, const std::string& path) {
  ObjectReader r(j, path, {"species", "r", "boundary", "vertices", "edges", "origin"});
  SimpleDegData d;
  d.species = species_from_json(r.at("species"), r.sub("species"));
  d.r = r.get_int("r");
  d.boundary = boundary_from_json(r.at("boundary"), r.sub("boundary"));
  d.boundary.h = static_cast<int>(arith::mod_floor(d.boundary.h, ctx.p));
  d.tree = tree_from(r, ctx.p);
  d.origin = anchor_from(r.at("origin"), ctx.p, r.sub("origin"));
  return d;
}

DoubleDegData double_from_json(const json& j, const PrimeContext& ctx, const std::string& path) {
  ObjectReader r(j, path, {"species", "r", "boundary1", "boundary2", "vertices", "edges", "end1", "end2"});
  DoubleDegData d;
  d.species = species_from_json(r.at("species"), r.sub("species"));
  d.r = r.get_int("r");
  d.boundary1 = boundary_from_json(r.at("boundary1"), r.sub("boundary1"));
  d.boundary2 = boundary_from_json(r.at("boundary2"), r.sub("boundary2"));
  d.boundary1.h = static_cast<int>(arith::mod_floor(d.boundary1.h, ctx.p));
  d.boundary2.h = static_cast<int>(arith::mod_floor(d.boundary2.h, ctx.p));
  d.tree = tree_from(r, ctx.p);
  d.end1 = anchor_from(r.at("end1"), ctx.p, r.sub("end1"));
  d.end2 = anchor_from(r.at("end2"), ctx.p, r.sub("end2"));
  return d;
}

json to_json(const GlobalDegData& g) {
  auto ref = [&](const PointRef& p) {
    return json{{"component", g.components.at(p.component).id}, {"point", g.point(p).name}};
  };
  json comps = json::array();
  for (const auto& c : g.components) {
    json pts = json::array();
    for (const auto& pt : c.points) {
      json jp{{"name", pt.name}, {"m", pt.label.m}, {"h", pt.label.h}};
      if (pt.place) jp["place"] = place_to_json(*pt.place);
      pts.push_back(jp);
    }
    comps.push_back(json{{"id", c.id}, {"genus", c.genus}, {"generic", c.generic}, {"torsor", torsor_to_json(c.torsor)},
                         {"delta", c.delta}, {"points", pts}});
  }
  json nodes = json::array();
  for (const auto& n : g.nodes) {
    json jn{{"a", ref(n.a)}, {"b", ref(n.b)}, {"r", n.r}};
    if (n.datum) jn["datum"] = to_json(*n.datum);
    nodes.push_back(jn);
  }
  json marked = json::array();
  for (const auto& m : g.marked) {
    json jm{{"at", ref(m.at)}, {"r", m.r}};
    if (m.datum) jm["datum"] = to_json(*m.datum);
    marked.push_back(jm);
  }
  json critical = json::array();
  for (const auto& c : g.critical) {
    json jc{{"at", ref(c.at)}};
    if (c.datum) jc["datum"] = to_json(*c.datum);
    critical.push_back(jc);
  }
  return json{{"r", g.r}, {"components", comps}, {"nodes", nodes}, {"marked", marked}, {"critical", critical}};
}

GlobalDegData global_from_json(const json& j, const PrimeContext& ctx, const std::string& path) {
  ObjectReader r(j, path, {"r", "components"}, {"nodes", "marked", "critical"});
  GlobalDegData g;
  g.r = r.get_int("r");
  const json& cs = as_array(r.at("components"), r.sub("components"));
  std::map<std::string, std::size_t> comp_index;
  std::vector<std::map<std::string, std::size_t>> point_index;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string cp = index_path(r.sub("components"), i);
    ObjectReader cr(cs[i], cp, {"id", "genus", "torsor", "delta"}, {"generic", "points"});
    Component c;
    c.id = cr.get_string("id");
    if (comp_index.count(c.id)) throw ParseError(cr.sub("id"), "duplicate component id \"" + c.id + "\"");
    c.genus = cr.get_int("genus");
    c.generic = cr.get_bool_or("generic", false);
    c.torsor = torsor_from_json(cr.at("torsor"), ctx.p, cr.sub("torsor"));
    c.delta = cr.get_int("delta");
    std::map<std::string, std::size_t> names;
    if (const json* ps = cr.find("points")) {
      as_array(*ps, cr.sub("points"));
      for (std::size_t k = 0; k < ps->size(); ++k) {
        ObjectReader pr((*ps)[k], index_path(cr.sub("points"), k), {"name", "m", "h"}, {"place"});
        ComponentPoint pt{pr.get_string("name"), optional_place(pr, "place", ctx.p), label_from(pr, ctx.p)};
        if (names.count(pt.name)) throw ParseError(pr.sub("name"), "duplicate point name \"" + pt.name + "\"");
        names[pt.name] = c.points.size();
        c.points.push_back(std::move(pt));
      }
    }
    comp_index[c.id] = g.components.size();
    point_index.push_back(std::move(names));
    g.components.push_back(std::move(c));
  }
  auto ref = [&](const json& jr, const std::string& rp) {
    ObjectReader rr(jr, rp, {"component", "point"});
    std::string cid = rr.get_string("component"), pname = rr.get_string("point");
    auto ci = comp_index.find(cid);
    if (ci == comp_index.end()) throw ParseError(rr.sub("component"), "unknown component \"" + cid + "\"");
    auto pi = point_index[ci->second].find(pname);
    if (pi == point_index[ci->second].end()) throw ParseError(rr.sub("point"), "unknown point \"" + pname + "\" on " + cid);
    return PointRef{ci->second, pi->second};
  };
  if (const json* ns = r.find("nodes")) {
    as_array(*ns, r.sub("nodes"));
    for (std::size_t i = 0; i < ns->size(); ++i) {
      ObjectReader nr((*ns)[i], index_path(r.sub("nodes"), i), {"a", "b", "r"}, {"datum"});
      NodeDatum n{ref(nr.at("a"), nr.sub("a")), ref(nr.at("b"), nr.sub("b")), nr.get_int("r"), std::nullopt};
      if (const json* dj = nr.find("datum")) n.datum = double_from_json(*dj, ctx, nr.sub("datum"));
      g.nodes.push_back(std::move(n));
    }
  }
  if (const json* ms = r.find("marked")) {
    as_array(*ms, r.sub("marked"));
    for (std::size_t i = 0; i < ms->size(); ++i) {
      ObjectReader mr((*ms)[i], index_path(r.sub("marked"), i), {"at", "r"}, {"datum"});
      MarkedDatum m{ref(mr.at("at"), mr.sub("at")), mr.get_int("r"), std::nullopt};
      if (const json* dj = mr.find("datum")) m.datum = simple_from_json(*dj, ctx, mr.sub("datum"));
      g.marked.push_back(std::move(m));
    }
  }
  if (const json* cs2 = r.find("critical")) {
    as_array(*cs2, r.sub("critical"));
    for (std::size_t i = 0; i < cs2->size(); ++i) {
      ObjectReader cr((*cs2)[i], index_path(r.sub("critical"), i), {"at"}, {"datum"});
      CriticalDatum c{ref(cr.at("at"), cr.sub("at")), std::nullopt};
      if (const json* dj = cr.find("datum")) c.datum = simple_from_json(*dj, ctx, cr.sub("datum"));
      g.critical.push_back(std::move(c));
    }
  }
  return g;
}

}  // namespace degp::degdata
