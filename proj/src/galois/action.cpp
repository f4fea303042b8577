#include <numeric>
#include <stdexcept>

#include "degp/arith/numtheory.hpp"
#include "degp/degdata/encode.hpp"
#include "degp/galois/galois.hpp"

namespace degp::galois {

using degdata::VertexTorsor;

namespace {

VertexTorsor act_torsor(const GaloisElement& sigma, const VertexTorsor& t) {
  if (const auto* rep = degdata::rep_of(t)) return torsor::galois_apply(sigma, *rep);
  return t;
}

void act_place(const GaloisElement& sigma, std::optional<Place>& z) {
  if (z) z = z->frobenius(sigma.absolute_power());
}

void act_tree(const GaloisElement& sigma, degdata::Tree& t) {
  for (auto& v : t.vertices) {
    v.torsor = act_torsor(sigma, v.torsor);
    for (auto& mp : v.marked) act_place(sigma, mp.location);
  }
  for (auto& e : t.edges) {
    act_place(sigma, e.at_u.location);
    act_place(sigma, e.at_v.location);
  }
}

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::uint64_t torsor_degree(const VertexTorsor& t) {
  std::uint64_t d = 1;
  if (const auto* rep = degdata::rep_of(t)) {
    d = arith::definition_degree(rep->rep());
    for (const auto& z : rep->punctures()) d = lcm64(d, z.degree());
  }
  return d;
}

std::uint64_t place_degree(const std::optional<Place>& z) { return z ? z->degree() : 1; }

std::uint64_t tree_degree(const degdata::Tree& t) {
  std::uint64_t d = 1;
  for (const auto& v : t.vertices) {
    d = lcm64(d, torsor_degree(v.torsor));
    for (const auto& mp : v.marked) d = lcm64(d, place_degree(mp.location));
  }
  for (const auto& e : t.edges) d = lcm64(lcm64(d, place_degree(e.at_u.location)), place_degree(e.at_v.location));
  return d;
}

template <class Data>
std::vector<std::string> orbit_of(const GaloisElement& sigma, const Data& d) {
  // sigma has order dividing the definition degree on everything in sight
  const std::uint64_t bound = definition_degree(d);
  std::vector<std::string> out{degdata::canonical_encode(d)};
  Data cur = d;
  for (std::uint64_t i = 0; i < bound; ++i) {
    cur = act(sigma, cur);
    auto enc = degdata::canonical_encode(cur);
    if (enc == out.front()) return out;
    out.push_back(std::move(enc));
  }
  throw std::logic_error("orbit did not close within the definition degree");
}

}  // namespace

SimpleDegData act(const GaloisElement& sigma, const SimpleDegData& d) {
  SimpleDegData out = d;
  act_tree(sigma, out.tree);
  act_place(sigma, out.origin.location);
  return out;
}

DoubleDegData act(const GaloisElement& sigma, const DoubleDegData& d) {
  DoubleDegData out = d;
  act_tree(sigma, out.tree);
  act_place(sigma, out.end1.location);
  act_place(sigma, out.end2.location);
  return out;
}

GlobalDegData act(const GaloisElement& sigma, const GlobalDegData& g) {
  GlobalDegData out = g;
  for (auto& c : out.components) {
    c.torsor = act_torsor(sigma, c.torsor);
    for (auto& pt : c.points) act_place(sigma, pt.place);
  }
  for (auto& n : out.nodes)
    if (n.datum) *n.datum = act(sigma, *n.datum);
  for (auto& m : out.marked)
    if (m.datum) *m.datum = act(sigma, *m.datum);
  for (auto& c : out.critical)
    if (c.datum) *c.datum = act(sigma, *c.datum);
  return out;
}

std::uint64_t definition_degree(const SimpleDegData& d) { return lcm64(tree_degree(d.tree), place_degree(d.origin.location)); }

std::uint64_t definition_degree(const DoubleDegData& d) {
  return lcm64(lcm64(tree_degree(d.tree), place_degree(d.end1.location)), place_degree(d.end2.location));
}

std::uint64_t definition_degree(const GlobalDegData& g) {
  std::uint64_t deg = 1;
  for (const auto& c : g.components) {
    deg = lcm64(deg, torsor_degree(c.torsor));
    for (const auto& pt : c.points) deg = lcm64(deg, place_degree(pt.place));
  }
  for (const auto& n : g.nodes)
    if (n.datum) deg = lcm64(deg, definition_degree(*n.datum));
  for (const auto& m : g.marked)
    if (m.datum) deg = lcm64(deg, definition_degree(*m.datum));
  for (const auto& c : g.critical)
    if (c.datum) deg = lcm64(deg, definition_degree(*c.datum));
  return deg;
}

std::vector<std::string> orbit(const GaloisElement& sigma, const SimpleDegData& d) { return orbit_of(sigma, d); }
std::vector<std::string> orbit(const GaloisElement& sigma, const DoubleDegData& d) { return orbit_of(sigma, d); }
std::vector<std::string> orbit(const GaloisElement& sigma, const GlobalDegData& g) { return orbit_of(sigma, g); }

}  // namespace degp::galois
