#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degp/degdata/model.hpp"
#include "json.hpp"

namespace degp::fiber {

using degdata::DoubleDegData;
using degdata::GlobalDegData;
using degdata::PrimeContext;
using degdata::SimpleDegData;
using torsor::Label;

/// Realization is impossible (negative genus, splitting disagreement, missing datum).
class RealizationError : public std::runtime_error {
 public:
  RealizationError(const std::string& location, const std::string& msg)
      : std::runtime_error(location + ": " + msg), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct FiberComponent {
  std::string id;
  int genus = 0;
  std::string provenance;
  bool operator==(const FiberComponent&) const = default;
};

using FiberEdge = std::pair<std::size_t, std::size_t>;

/// First Betti number of a multigraph: |E| - |V| + (number of connected components).
int betti_number(std::size_t vertices, const std::vector<FiberEdge>& edges);
/// Connected component index of each vertex.
std::vector<std::size_t> connected_components(std::size_t vertices, const std::vector<FiberEdge>& edges);

/// Upstairs picture of one local datum.
struct CurveFragment {
  std::vector<FiberComponent> components;
  std::vector<FiberEdge> edges;
  /// One (simple) or two (double) lists of attachment points, each naming a component.
  std::vector<std::vector<std::size_t>> boundaries;

  int genus_sum() const;
  int b1() const;
  /// Sum of genera plus b1.
  int arithmetic_genus() const { return genus_sum() + b1(); }
};

struct SpecialFiber {
  std::vector<FiberComponent> components;
  std::vector<FiberEdge> edges;
  int b1 = 0;
  int total_genus = 0;
  int connected = 0;
};

struct VertexRealization {
  std::vector<FiberComponent> components;
  /// For each incident point (in the order given), the components carrying its preimages.
  std::vector<std::vector<std::size_t>> preimages;
};

/// Cover of one component of genus `base_genus` with the given torsor and incident labels.
VertexRealization realize_vertex(const PrimeContext& ctx, const degdata::VertexTorsor& torsor, int base_genus,
                                 const std::vector<Label>& incident, const std::string& id);

CurveFragment realize_simple(const PrimeContext& ctx, const SimpleDegData& d);
CurveFragment realize_double(const PrimeContext& ctx, const DoubleDegData& d);

SpecialFiber realize_global(const PrimeContext& ctx, const GlobalDegData& g);

struct Diagnostic {
  std::string location;
  std::string message;
};

struct ConservationResult {
  int expected = 0;
  int realized = 0;
  bool ok = false;
  /// Upstairs connected components (1 for a connected cover, p for a split one).
  int connected = 0;
  /// Local ledgers that do not close: fragment genus against the genus of the datum's type.
  std::vector<Diagnostic> diagnostics;
};

/// Genus of the generic fiber from 2g_Y - 2 = p(2g_X - 2) + r(p-1), compared with the realized fiber.
ConservationResult conservation_check(const PrimeContext& ctx, const GlobalDegData& g);

nlohmann::json to_json(const CurveFragment& f);
nlohmann::json to_json(const SpecialFiber& s);
std::string to_dot(const SpecialFiber& s);
std::string to_dot(const CurveFragment& f);

}  // namespace degp::fiber
