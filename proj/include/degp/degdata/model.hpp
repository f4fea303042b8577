#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "degp/torsor/torsor.hpp"

namespace degp::degdata {

using arith::Place;
using torsor::BoundaryType;
using torsor::GroupKind;
using torsor::Label;
using torsor::TorsorRep;

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (p, v_K(p)).
struct PrimeContext {
  int p = 3;
  int vKp = 2;

  /// Throws StructureError unless p is prime, vKp > 0 and (p-1) | vKp.
  static PrimeContext make(int p, int vKp);
  int vLambda() const { return vKp / (p - 1); }
  bool operator==(const PrimeContext&) const = default;
};

enum class Species { Split, NonSplit };
const char* species_name(Species s);

struct SplitMarker {
  bool operator==(const SplitMarker&) const = default;
};

/// Kind only; the (m, h) labels live on the points of the vertex or component.
struct SymbolicTorsor {
  GroupKind kind = GroupKind::Etale;
  bool operator==(const SymbolicTorsor&) const = default;
};

using VertexTorsor = std::variant<SplitMarker, SymbolicTorsor, TorsorRep>;

bool is_split(const VertexTorsor& t);
/// nullopt for the split marker.
std::optional<GroupKind> kind_of(const VertexTorsor& t);
const TorsorRep* rep_of(const VertexTorsor& t);
/// "split", "etale", "mult" or "add".
std::string torsor_tag(const VertexTorsor& t);

struct MarkedPoint {
  std::optional<Place> location;
  Label label;
  int r = 0;
  bool operator==(const MarkedPoint&) const = default;
};

struct Vertex {
  VertexTorsor torsor = SymbolicTorsor{};
  int delta = 0;
  int genus = 0;
  std::vector<MarkedPoint> marked;
  bool operator==(const Vertex&) const = default;
};

struct HalfEdge {
  Label label;
  std::optional<Place> location;
  bool operator==(const HalfEdge&) const = default;
};

/// A double point of the tree; e = p*t is its thickness.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  int e = 0;
  HalfEdge at_u;
  HalfEdge at_v;
  bool operator==(const Edge&) const = default;
};

struct Tree {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  bool operator==(const Tree&) const = default;
};

/// Where a boundary of the local datum meets the tree: the origin of simple data,
/// either end of the geodesic of double data. `label` is read on the vertex side.
struct Anchor {
  std::size_t vertex = 0;
  Label label;
  std::optional<Place> location;
  int e = 0;
  bool operator==(const Anchor&) const = default;
};

struct SimpleDegData {
  Species species = Species::NonSplit;
  int r = 0;
  BoundaryType boundary;
  Tree tree;
  Anchor origin;
  bool operator==(const SimpleDegData&) const = default;
};

struct DoubleDegData {
  Species species = Species::NonSplit;
  int r = 0;
  BoundaryType boundary1;
  BoundaryType boundary2;
  Tree tree;
  Anchor end1;
  Anchor end2;
  bool operator==(const DoubleDegData&) const = default;
};

// ---- global data ----

struct ComponentPoint {
  std::string name;
  std::optional<Place> place;
  Label label;
  bool operator==(const ComponentPoint&) const = default;
};

struct Component {
  std::string id;
  int genus = 0;
  bool generic = false;
  VertexTorsor torsor = SymbolicTorsor{};
  int delta = 0;
  std::vector<ComponentPoint> points;
  bool operator==(const Component&) const = default;
};

struct PointRef {
  std::size_t component = 0;
  std::size_t point = 0;
  auto operator<=>(const PointRef&) const = default;
};

struct NodeDatum {
  PointRef a;
  PointRef b;
  int r = 0;
  std::optional<DoubleDegData> datum;  // absent: type-only stub
  bool operator==(const NodeDatum&) const = default;
};

struct MarkedDatum {
  PointRef at;
  int r = 0;
  std::optional<SimpleDegData> datum;
  bool operator==(const MarkedDatum&) const = default;
};

struct CriticalDatum {
  PointRef at;
  std::optional<SimpleDegData> datum;
  bool operator==(const CriticalDatum&) const = default;
};

struct GlobalDegData {
  int r = 0;
  std::vector<Component> components;
  std::vector<NodeDatum> nodes;
  std::vector<MarkedDatum> marked;
  std::vector<CriticalDatum> critical;
  bool operator==(const GlobalDegData&) const = default;

  const ComponentPoint& point(const PointRef& ref) const { return components.at(ref.component).points.at(ref.point); }
  /// Sum of node and marked-point branch counts.
  int branch_total() const;
};

/// Empty if the tree is connected and acyclic with in-range endpoints.
std::optional<std::string> tree_problem(const Tree& t);

/// Vertices on the unique path from a to b, inclusive (tree must be valid).
std::vector<std::size_t> tree_path(const Tree& t, std::size_t a, std::size_t b);

/// Per vertex: list of (edge index, neighbour).
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const Tree& t);

}  // namespace degp::degdata
