#include "rules.hpp"

namespace degp::validate::detail {

std::string label_str(const torsor::Label& l) { return "(" + std::to_string(l.m) + "," + std::to_string(l.h) + ")"; }

std::optional<std::string> label_problem(GroupKind kind, const torsor::Label& l, Role role, int p) {
  const std::string s = label_str(l);
  switch (kind) {
    case GroupKind::Etale:
      if (l.m < 0) return "etale label " + s + " has negative conductor";
      if (l.h != 0) return "etale label " + s + " carries a residue";
      if (l.m > 0 && l.m % p == 0) return "etale conductor in " + s + " is divisible by p";
      if (l.m == 0 && (role == Role::Marked || role == Role::Anchor))
        return "etale label " + s + " at a boundary or marked point needs a positive conductor";
      return std::nullopt;
    case GroupKind::Mult:
      if (l.m > 0) return "label " + s + " on a mult torsor: df/f has only simple poles";
      if (l.m == 0) return std::nullopt;  // h == 0 is the splitting rule's business
      if (l.h != 0) return "label " + s + " on a mult torsor: residue away from a simple pole";
      if (l.m % p == 0) return "label " + s + " has m divisible by p";
      return std::nullopt;
    case GroupKind::Add:
      if (l.h != 0) return "label " + s + " on an add torsor: exact forms have no residues";
      if (l.m != 0 && l.m % p == 0) return "label " + s + " has m divisible by p";
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::string> degree_problem(GroupKind kind, const std::vector<SpecialPoint>& pts, int genus, int p) {
  if (!torsor::is_radicial(kind)) return std::nullopt;
  long long deg = 0, residues = 0;
  for (const auto& pt : pts) {
    deg += -pt.label.m - 1;
    residues += pt.label.h;
  }
  if (deg != 2LL * genus - 2)
    return "labels give omega degree " + std::to_string(deg) + ", expected " + std::to_string(2LL * genus - 2);
  if (kind == GroupKind::Mult && residues % p != 0)
    return "residues sum to " + std::to_string(residues) + ", not 0 mod p";
  return std::nullopt;
}

std::vector<std::string> representative_problems(const torsor::TorsorRep& T, GroupKind kind,
                                                 const std::vector<SpecialPoint>& pts, int p, bool report_unlocated) {
  std::vector<std::string> out;
  if (T.kind() != kind) {
    out.push_back(std::string("representative is ") + torsor::kind_name(T.kind()) + " but the vertex is " +
                  torsor::kind_name(kind));
    return out;
  }
  std::vector<arith::Place> located;
  bool all_located = true;
  for (const auto& pt : pts) {
    if (!pt.location) {
      all_located = false;
      if (report_unlocated) out.push_back(pt.path + " has no location on a concrete representative");
      continue;
    }
    if (!pt.location->is_infinity() && static_cast<int>(pt.location->p()) != p) {
      out.push_back(pt.path + " is located over the wrong prime");
      continue;
    }
    located.push_back(*pt.location);
    auto got = torsor::conductor_residue_at(T, *pt.location);
    if (got != pt.label)
      out.push_back(pt.path + " is labelled " + label_str(pt.label) + " but the representative gives " + label_str(got));
  }
  // with a point unlocated, a pole may well sit under it
  if (!all_located) return out;
  for (const auto& z : torsor::admissibility_violations(T, located))
    out.push_back("representative has special point " + z.to_string() + " that is not a marked or double point");
  return out;
}

}  // namespace degp::validate::detail
