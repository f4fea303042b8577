#pragma once

#include <optional>
#include <string>
#include <vector>

#include "degp/validate/validate.hpp"

namespace degp::validate::detail {

class Collector {
 public:
  explicit Collector(std::string id) : id_(std::move(id)) {}

  void fail(const std::string& location, const std::string& message) { fails_.emplace_back(location, message); }
  bool failed() const { return !fails_.empty(); }

  AxiomResult result(const std::string& pass_message) const {
    AxiomResult a{id_, fails_.empty(), pass_message, ""};
    if (fails_.empty()) return a;
    a.location = fails_.front().first;
    a.message.clear();
    for (std::size_t i = 0; i < fails_.size(); ++i) {
      if (i) a.message += "; ";
      if (i && !fails_[i].first.empty()) a.message += fails_[i].first + ": ";
      a.message += fails_[i].second;
    }
    return a;
  }

 private:
  std::string id_;
  std::vector<std::pair<std::string, std::string>> fails_;
};

enum class Role { Marked, Edge, Anchor, Point };

struct SpecialPoint {
  torsor::Label label;
  std::optional<arith::Place> location;
  std::string path;
  Role role = Role::Point;
};

/// Shape of a label at a point of a torsor of the given kind. (0,0) on a radicial kind is
/// left to the splitting rule and reported as fine here.
std::optional<std::string> label_problem(GroupKind kind, const torsor::Label& l, Role role, int p);

/// Conditions tying the labels of one line (or curve of genus g) together: the degree of
/// omega for radicial kinds and the residue sum for Mult.
std::optional<std::string> degree_problem(GroupKind kind, const std::vector<SpecialPoint>& pts, int genus, int p);

/// Conductor/residue agreement and admissibility of a concrete representative. Admissibility
/// is only judged once every point is located.
std::vector<std::string> representative_problems(const torsor::TorsorRep& T, GroupKind kind,
                                                 const std::vector<SpecialPoint>& pts, int p, bool report_unlocated);

std::string label_str(const torsor::Label& l);

}  // namespace degp::validate::detail
