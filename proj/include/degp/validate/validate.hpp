#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "degp/degdata/model.hpp"
#include "json.hpp"

namespace degp::validate {

using degdata::DoubleDegData;
using degdata::GlobalDegData;
using degdata::PrimeContext;
using degdata::SimpleDegData;
using torsor::GroupKind;

class GenusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (r-m-1)(p-1)/2; throws GenusError when negative or not integral.
int genus_simple(const PrimeContext& ctx, int r, int m);
/// (r-m1-m2)(p-1)/2.
int genus_double(const PrimeContext& ctx, int r, int m1, int m2);
/// (-m-1)(p-1)/2 for m <= -1.
int genus_tail(const PrimeContext& ctx, int m);

/// 0 -> Etale, vKp -> Mult, otherwise Add. Throws std::out_of_range for delta outside
/// [0, vKp] or not divisible by p-1.
GroupKind kind_from_delta(const PrimeContext& ctx, int delta);
bool delta_in_range(const PrimeContext& ctx, int delta);

/// Different degree on the far side of a double point of thickness e, crossing from a side
/// with different delta and conductor m: delta + m*(e/p)*(p-1).
int delta_across(const PrimeContext& ctx, int delta, int m, int e);

struct AxiomResult {
  std::string id;
  bool pass = true;
  std::string message;
  std::string location;
};

struct ValidationReport {
  std::vector<AxiomResult> entries;

  bool ok() const;
  const AxiomResult* find(const std::string& id) const;
  std::vector<std::string> failed() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
  bool operator==(const ValidationReport& o) const;
};

/// Axioms A1-A9.
ValidationReport check_simple(const PrimeContext& ctx, const SimpleDegData& d);
/// Axioms A1-A9 with two boundary matchings.
ValidationReport check_double(const PrimeContext& ctx, const DoubleDegData& d);
/// Axioms G1-G8.
ValidationReport check_global(const PrimeContext& ctx, const GlobalDegData& g);

/// Right-hand side of the genus identity, doubled: sum over etale vertices of
/// (-2 + sum over special points of (m+1)) * (p-1).
int deg8_rhs_twice(const PrimeContext& ctx, const degdata::Tree& t, const std::vector<degdata::Anchor>& anchors);

}  // namespace degp::validate
