#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "degp/degdata/model.hpp"

namespace degp::galois {

using arith::GaloisElement;
using arith::Place;
using degdata::DoubleDegData;
using degdata::GlobalDegData;
using degdata::PrimeContext;
using degdata::SimpleDegData;
using torsor::GroupKind;
using torsor::TorsorRep;

/// Transport of data along sigma: representatives and located points move, numeric labels stay.
SimpleDegData act(const GaloisElement& sigma, const SimpleDegData& d);
DoubleDegData act(const GaloisElement& sigma, const DoubleDegData& d);
GlobalDegData act(const GaloisElement& sigma, const GlobalDegData& g);

/// Lcm of the definition degrees of every coefficient and point appearing in the datum.
std::uint64_t definition_degree(const SimpleDegData& d);
std::uint64_t definition_degree(const DoubleDegData& d);
std::uint64_t definition_degree(const GlobalDegData& g);

/// Canonical encodings of d, sigma d, sigma^2 d, ... up to the first repetition.
std::vector<std::string> orbit(const GaloisElement& sigma, const SimpleDegData& d);
std::vector<std::string> orbit(const GaloisElement& sigma, const DoubleDegData& d);
std::vector<std::string> orbit(const GaloisElement& sigma, const GlobalDegData& g);

// ---- covers ----

struct CoverComponent {
  std::string id;
  int genus = 0;
  /// nullopt: the cover is split over this component.
  std::optional<TorsorRep> torsor;
  /// Different degree; defaults to 0 (etale) or vKp (mult). Required for add.
  std::optional<int> delta;
};

struct CoverPoint {
  std::size_t component = 0;
  Place place;
  bool operator==(const CoverPoint&) const = default;
};

struct CoverNode {
  CoverPoint a;
  CoverPoint b;
  bool operator==(const CoverNode&) const = default;
};

/// Per-component torsor representatives on a marked base graph. The marked points of a
/// component are the punctures of its representative.
struct CoverDescription {
  std::vector<CoverComponent> components;
  std::vector<CoverNode> nodes;
};

class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Kinds, labels and critical points read off the representatives; local data are emitted as
/// type-only stubs. Throws ExtractionError for an inadmissible torsor, naming the place.
GlobalDegData extract_degdata(const PrimeContext& ctx, const CoverDescription& cover);

CoverDescription act(const GaloisElement& sigma, const CoverDescription& cover);

/// extract(sigma cover) and sigma extract(cover) have the same canonical encoding.
bool equivariance_check(const PrimeContext& ctx, const GaloisElement& sigma, const CoverDescription& cover);

/// One or two genus-0 components with random representatives over F_{p^2} (at most
/// `max_punctures` punctures each), joined by a node at regular points.
CoverDescription random_cover(const PrimeContext& ctx, std::mt19937_64& rng, int max_punctures = 4);

// ---- enumeration ----

struct EnumBounds {
  int max_vertices = 1;
  /// |m| bound for every label.
  int max_conductor = 1;
  /// Bound on t = e/p for every edge and anchor.
  int max_thickness = 1;
  /// Marked points per vertex.
  int max_marked = 1;
};

/// Valid non-split data within the bounds, one per isomorphism class, sorted by canonical encoding.
std::vector<SimpleDegData> enum_simple(const PrimeContext& ctx, const EnumBounds& bounds);
std::vector<DoubleDegData> enum_double(const PrimeContext& ctx, const EnumBounds& bounds);

}  // namespace degp::galois
