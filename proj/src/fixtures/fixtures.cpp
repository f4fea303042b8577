#include "degp/fixtures/fixtures.hpp"

#include "degp/arith/rational_function.hpp"

namespace degp::fixtures {

using degdata::Anchor;
using degdata::Component;
using degdata::ComponentPoint;
using degdata::CriticalDatum;
using degdata::Edge;
using degdata::HalfEdge;
using degdata::MarkedPoint;
using degdata::NodeDatum;
using degdata::SymbolicTorsor;
using degdata::Vertex;
using torsor::BoundaryType;
using torsor::GroupKind;
using torsor::Label;

namespace {

Vertex etale_line() { return Vertex{SymbolicTorsor{GroupKind::Etale}, 0, 0, {}}; }

Edge split_edge(std::size_t u, std::size_t v, int e) { return Edge{u, v, e, HalfEdge{{0, 0}, {}}, HalfEdge{{0, 0}, {}}}; }

BoundaryType mult(int m, int h = 0) { return BoundaryType{GroupKind::Mult, m, h}; }

void require_odd(int p, const char* what) {
  if (p == 2) throw degdata::StructureError(std::string(what) + " needs an odd prime");
}

// Generic genus-2 mult component: the given point labels plus free zeros named c1, c2, ...
Component genus2_component(const PrimeContext& ctx, const std::string& id, std::vector<ComponentPoint> pts, int zeros) {
  for (int i = 1; i <= zeros; ++i) pts.push_back({id + ".c" + std::to_string(i), std::nullopt, {-2, 0}});
  return Component{id, 2, true, SymbolicTorsor{GroupKind::Mult}, ctx.vKp, std::move(pts)};
}

// Global datum with a single node between two genus-2 mult components; the node has
// labels la, lb and every other point is a free zero carrying an F1 tail.
GlobalFixture two_component(int p, Label la, Label lb, const DoubleDegData& node, int r) {
  PrimeContext ctx = standard_context(p);
  int za = 2 + la.m + 1, zb = 2 + lb.m + 1;  // omega has degree 2 on each component
  GlobalDegData g;
  g.r = r;
  g.components.push_back(genus2_component(ctx, "X1", {{"n", std::nullopt, la}}, za));
  g.components.push_back(genus2_component(ctx, "X2", {{"n", std::nullopt, lb}}, zb));
  g.nodes.push_back(NodeDatum{{0, 0}, {1, 0}, r, node});
  auto tail = f1(p).data;
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t j = 1; j < g.components[c].points.size(); ++j) g.critical.push_back(CriticalDatum{{c, j}, tail});
  return {ctx, g};
}

}  // namespace

PrimeContext standard_context(int p) { return PrimeContext::make(p, 2 * (p - 1)); }

SimpleFixture f1(int p) {
  require_odd(p, "F1");
  SimpleDegData d;
  d.r = 0;
  d.boundary = mult(-2);
  d.tree.vertices.push_back(etale_line());
  d.origin = Anchor{0, {2, 0}, std::nullopt, p};
  return {standard_context(p), d};
}

SimpleFixture one_line(int p, int conductor) {
  if (conductor < 1 || conductor % p == 0) throw degdata::StructureError("conductor must be positive and prime to p");
  SimpleDegData d;
  d.r = 0;
  d.boundary = mult(-conductor);
  d.tree.vertices.push_back(etale_line());
  d.origin = Anchor{0, {conductor, 0}, std::nullopt, p};
  return {PrimeContext::make(p, conductor * (p - 1)), d};
}

SimpleFixture f2(int p) {
  SimpleDegData d;
  d.r = 2;
  d.boundary = mult(-1);
  d.tree.vertices = {etale_line(), etale_line()};
  d.tree.vertices[1].marked.push_back(MarkedPoint{std::nullopt, {1, 0}, 2});
  d.tree.edges.push_back(split_edge(0, 1, p));
  d.origin = Anchor{0, {1, 0}, std::nullopt, 2 * p};
  return {standard_context(p), d};
}

SimpleFixture f2_concrete() {
  auto fx = f2(3);
  auto F9 = arith::field_make(3, 2);
  auto g = arith::RationalFunction::constant(arith::Fq::generator(F9)) / arith::RationalFunction::t(F9);
  auto& v0 = fx.data.tree.vertices[0];
  v0.torsor = torsor::TorsorRep::make(GroupKind::Etale, g);
  fx.data.origin.location = arith::Place::from_element(arith::Fq::from_int(F9, 0));
  fx.data.tree.edges[0].at_u.location = arith::Place::infinity();
  return fx;
}

DoubleFixture f3(int p) {
  DoubleDegData d;
  d.r = 0;
  d.boundary1 = d.boundary2 = mult(-1);
  d.tree.vertices.push_back(etale_line());
  d.end1 = Anchor{0, {1, 0}, std::nullopt, 2 * p};
  d.end2 = Anchor{0, {1, 0}, std::nullopt, 2 * p};
  return {standard_context(p), d};
}

DoubleFixture f4(int p) {
  DoubleDegData d;
  d.r = 0;
  d.boundary1 = d.boundary2 = mult(-1);
  d.tree.vertices = {etale_line(), etale_line()};
  d.tree.edges.push_back(split_edge(0, 1, p));
  d.end1 = Anchor{0, {1, 0}, std::nullopt, 2 * p};
  d.end2 = Anchor{1, {1, 0}, std::nullopt, 2 * p};
  return {standard_context(p), d};
}

DoubleFixture f4_normalized(int p) {
  auto fx = f4(p);
  fx.data.r = 2;
  fx.data.tree.vertices[0].marked.push_back(MarkedPoint{std::nullopt, {1, 0}, 2});
  return fx;
}

DoubleFixture f4_as_printed(int p) {
  require_odd(p, "F4 as printed");
  auto fx = f4(p);
  fx.data.end1.label = fx.data.end2.label = Label{2, 0};
  fx.data.end1.e = fx.data.end2.e = p;
  return fx;
}

DoubleFixture trivial_chain(int p, int length, int h) {
  if (length < 1) throw degdata::StructureError("chain length must be positive");
  h = ((h % p) + p) % p;
  if (h == 0) throw degdata::StructureError("residue must be nonzero mod p");
  PrimeContext ctx = standard_context(p);
  DoubleDegData d;
  d.r = 0;
  d.boundary1 = mult(0, h);
  d.boundary2 = mult(0, p - h);
  Label in{0, p - h}, out{0, h};
  for (int i = 0; i < length; ++i) d.tree.vertices.push_back(Vertex{SymbolicTorsor{GroupKind::Mult}, ctx.vKp, 0, {}});
  for (int i = 0; i + 1 < length; ++i)
    d.tree.edges.push_back(Edge{std::size_t(i), std::size_t(i + 1), p, HalfEdge{out, {}}, HalfEdge{in, {}}});
  d.end1 = Anchor{0, in, std::nullopt, p};
  d.end2 = Anchor{std::size_t(length - 1), out, std::nullopt, p};
  return {ctx, d};
}

GlobalFixture f5(int p) {
  require_odd(p, "F5");
  return two_component(p, {-1, 0}, {-1, 0}, f3(p).data, 0);
}

GlobalFixture f5_zero_at_node(int p) {
  require_odd(p, "F5");
  auto node = f3(p).data;
  node.boundary2 = mult(-2);
  node.end2 = Anchor{0, {2, 0}, std::nullopt, p};
  return two_component(p, {-1, 0}, {-2, 0}, node, 0);
}

GlobalFixture f5_second_case(int p, bool as_printed) {
  require_odd(p, "F5");
  if (as_printed) return two_component(p, {-1, 0}, {-1, 0}, f4_as_printed(p).data, 0);
  return two_component(p, {-1, 0}, {-1, 0}, f4_normalized(p).data, 2);
}

GlobalFixture marked_branch(int p) {
  require_odd(p, "marked-branch");
  PrimeContext ctx = standard_context(p);
  SimpleDegData tail;
  tail.r = 3;
  tail.boundary = BoundaryType{GroupKind::Etale, 2, 0};
  Vertex v{SymbolicTorsor{GroupKind::Mult}, ctx.vKp, 0, {}};
  for (int h : {1, 1, p - 2}) v.marked.push_back(MarkedPoint{std::nullopt, {0, h}, 1});
  tail.tree.vertices.push_back(v);
  tail.origin = Anchor{0, {-2, 0}, std::nullopt, p};
  GlobalDegData g;
  g.r = 3;
  g.components.push_back(Component{"X", 0, false, SymbolicTorsor{GroupKind::Etale}, 0, {{"x", std::nullopt, {2, 0}}}});
  g.marked.push_back(degdata::MarkedDatum{{0, 0}, 3, tail});
  return {ctx, g};
}

GlobalFixture double_zero(int p) {
  if (p < 5) throw degdata::StructureError("double-zero needs p >= 5");
  auto tail = one_line(p, 3);
  GlobalDegData g;
  g.r = 0;
  g.components.push_back(Component{"X", 2, false, SymbolicTorsor{GroupKind::Mult}, tail.ctx.vKp, {{"c", std::nullopt, {-3, 0}}}});
  g.critical.push_back(CriticalDatum{{0, 0}, tail.data});
  return {tail.ctx, g};
}

GlobalFixture split_everywhere(int p, int g1, int g2) {
  PrimeContext ctx = standard_context(p);
  GlobalDegData g;
  g.r = 0;
  g.components.push_back(Component{"X1", g1, false, degdata::SplitMarker{}, 0, {{"n", std::nullopt, {0, 0}}}});
  g.components.push_back(Component{"X2", g2, false, degdata::SplitMarker{}, 0, {{"n", std::nullopt, {0, 0}}}});
  g.nodes.push_back(NodeDatum{{0, 0}, {1, 0}, 0, std::nullopt});
  return {ctx, g};
}

std::vector<std::string> fixture_names() {
  return {"F1", "one-line", "F2", "F2-concrete", "F3", "F4", "F4-normalized", "F4-as-printed", "trivial-chain",
          "F5", "F5-zero-at-node", "F5-second-case", "F5-second-case-as-printed", "marked-branch", "double-zero",
          "split-everywhere"};
}

}  // namespace degp::fixtures
