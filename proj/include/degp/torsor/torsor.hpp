#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degp/arith/galois_element.hpp"
#include "degp/arith/rational_function.hpp"

namespace degp::torsor {

using arith::GaloisElement;
using arith::Place;
using arith::RationalFunction;

enum class GroupKind { Etale, Mult, Add };

const char* kind_name(GroupKind k);
std::optional<GroupKind> parse_kind(std::string_view s);
inline bool is_radicial(GroupKind k) { return k != GroupKind::Etale; }

/// Conductor m and residue h (h stored in [0, p)).
struct Label {
  int m = 0;
  int h = 0;
  auto operator<=>(const Label&) const = default;
};

struct BoundaryType {
  GroupKind kind = GroupKind::Etale;
  int m = 0;
  int h = 0;
  auto operator<=>(const BoundaryType&) const = default;
};

/// Empty when (kind, m, h) satisfies the invariants of a degeneration type.
std::optional<std::string> boundary_type_problem(const BoundaryType& b, int p);

class TorsorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The class is trivial: callers must use the split marker instead of a representative.
class SplitTorsor : public TorsorError {
 public:
  using TorsorError::TorsorError;
};

/// Artin-Schreier reduction: g modulo a^p - a and constants, every pole order prime to p.
/// nullopt means the class is trivial over the algebraic closure.
std::optional<RationalFunction> as_reduce(const RationalFunction& g);
/// g modulo p-th powers, in the same digit-reduced form; nullopt for a p-th power.
std::optional<RationalFunction> additive_reduce(const RationalFunction& g);
/// f modulo p-th powers: product of monic irreducibles with exponents in [1, p); nullopt for a p-th power.
std::optional<RationalFunction> kummer_reduce(const RationalFunction& f);

class TorsorRep {
 public:
  /// Reduces the representative to canonical form over its smallest field of definition.
  /// Throws SplitTorsor when the class is trivial.
  static TorsorRep make(GroupKind kind, const RationalFunction& rep, std::vector<Place> punctures = {});

  GroupKind kind() const { return kind_; }
  const RationalFunction& rep() const { return rep_; }
  const std::vector<Place>& punctures() const { return punctures_; }

  bool operator==(const TorsorRep& o) const = default;

 private:
  TorsorRep() = default;
  GroupKind kind_ = GroupKind::Etale;
  RationalFunction rep_;
  std::vector<Place> punctures_;
};

/// Coefficient R of omega = R dt: dg for Etale/Add, df/f for Mult.
RationalFunction omega(const TorsorRep& T);

/// Order at z of the differential R dt (at infinity: ord(R) - 2).
int differential_order_at(const RationalFunction& R, const Place& z);
/// Divisor of R dt over the algebraic closure, sorted by place.
std::vector<std::pair<Place, int>> differential_divisor(const RationalFunction& R);

Label conductor_residue_at(const TorsorRep& T, const Place& z);

/// Places where the torsor carries data: poles of g (Etale) or zeros and poles of omega.
std::vector<Place> special_support(const TorsorRep& T);
/// Zeros of omega for radicial kinds; empty for Etale.
std::vector<Place> critical_points(const TorsorRep& T);
/// Support points missing from `special`.
std::vector<Place> admissibility_violations(const TorsorRep& T, const std::vector<Place>& special);
bool is_admissible(const TorsorRep& T, const std::vector<Place>& special);

TorsorRep galois_apply(const GaloisElement& sigma, const TorsorRep& T);

}  // namespace degp::torsor
