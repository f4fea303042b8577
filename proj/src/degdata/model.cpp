#include "degp/degdata/model.hpp"

#include <functional>

#include "degp/arith/numtheory.hpp"

namespace degp::degdata {

PrimeContext PrimeContext::make(int p, int vKp) {
  if (p < 2 || !arith::is_prime(static_cast<std::uint64_t>(p))) throw StructureError("p=" + std::to_string(p) + " is not prime");
  if (vKp <= 0) throw StructureError("vKp must be positive");
  if (vKp % (p - 1) != 0) throw StructureError("p-1=" + std::to_string(p - 1) + " does not divide vKp=" + std::to_string(vKp));
  return {p, vKp};
}

const char* species_name(Species s) { return s == Species::Split ? "split" : "nonsplit"; }

bool is_split(const VertexTorsor& t) { return std::holds_alternative<SplitMarker>(t); }

std::optional<GroupKind> kind_of(const VertexTorsor& t) {
  if (auto* s = std::get_if<SymbolicTorsor>(&t)) return s->kind;
  if (auto* r = std::get_if<TorsorRep>(&t)) return r->kind();
  return std::nullopt;
}

const TorsorRep* rep_of(const VertexTorsor& t) { return std::get_if<TorsorRep>(&t); }

std::string torsor_tag(const VertexTorsor& t) {
  auto k = kind_of(t);
  return k ? torsor::kind_name(*k) : "split";
}

int GlobalDegData::branch_total() const {
  int total = 0;
  for (const auto& n : nodes) total += n.r;
  for (const auto& m : marked) total += m.r;
  return total;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const Tree& t) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(t.vertices.size());
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const auto& e = t.edges[i];
    if (e.u >= adj.size() || e.v >= adj.size()) continue;
    adj[e.u].emplace_back(i, e.v);
    adj[e.v].emplace_back(i, e.u);
  }
  return adj;
}

std::optional<std::string> tree_problem(const Tree& t) {
  const std::size_t n = t.vertices.size();
  if (n == 0) return "tree has no vertices";
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const auto& e = t.edges[i];
    if (e.u >= n || e.v >= n) return "edges[" + std::to_string(i) + "] has an endpoint out of range";
    if (e.u == e.v) return "edges[" + std::to_string(i) + "] is a loop";
  }
  if (t.edges.size() != n - 1) return "a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) + " edges, found " + std::to_string(t.edges.size());
  auto adj = adjacency(t);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [ei, w] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != n) return "tree is disconnected";
  return std::nullopt;
}

std::vector<std::size_t> tree_path(const Tree& t, std::size_t a, std::size_t b) {
  auto adj = adjacency(t);
  std::vector<std::size_t> parent(t.vertices.size(), SIZE_MAX);
  std::vector<std::size_t> stack{a};
  parent[a] = a;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto [ei, w] : adj[v])
      if (parent[w] == SIZE_MAX) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<std::size_t> path;
  if (parent[b] == SIZE_MAX) return path;
  for (std::size_t v = b; v != a; v = parent[v]) path.push_back(v);
  path.push_back(a);
  return {path.rbegin(), path.rend()};
}

}  // namespace degp::degdata
