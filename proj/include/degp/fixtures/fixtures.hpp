#pragma once

#include <string>
#include <vector>

#include "degp/degdata/model.hpp"

namespace degp::fixtures {

using degdata::DoubleDegData;
using degdata::GlobalDegData;
using degdata::PrimeContext;
using degdata::SimpleDegData;

struct SimpleFixture {
  PrimeContext ctx;
  SimpleDegData data;
};

struct DoubleFixture {
  PrimeContext ctx;
  DoubleDegData data;
};

struct GlobalFixture {
  PrimeContext ctx;
  GlobalDegData data;
};

/// (p, 2(p-1)): the context in which every stored fixture lives unless stated otherwise.
PrimeContext standard_context(int p);

/// One etale line, origin conductor 2, type (0,(mult,-2,0)); genus (p-1)/2. Needs p odd.
SimpleFixture f1(int p);
/// One etale line with origin conductor M (prime to p), type (0,(mult,-M,0)), in context (p, M(p-1)).
SimpleFixture one_line(int p, int conductor);
/// Two etale lines joined by a split edge, conductor 1 at the origin and at one marked point;
/// type (2,(mult,-1,0)).
SimpleFixture f2(int p);
/// F2 over F_3 with the origin torsor given concretely by a/t, a a generator of F_9.
SimpleFixture f2_concrete();

/// One etale line with both geodesic ends of conductor 1; type (0,(mult,-1,0),(mult,-1,0)).
DoubleFixture f3(int p);
/// Two etale lines joined by a split edge, one geodesic end on each; same type as F3.
DoubleFixture f4(int p);
/// F4 with a branch point of conductor 1 (r=2) on the first line; type (2,(mult,-1,0),(mult,-1,0)).
DoubleFixture f4_normalized(int p);
/// The printed second case: both lines carry conductor 2 at the geodesic ends, type as F3.
DoubleFixture f4_as_printed(int p);
/// Chain of mult lines with simple poles of residues h, -h; type (0,(mult,0,h),(mult,0,-h)), genus 0.
DoubleFixture trivial_chain(int p, int length, int h);

/// Two generic genus-2 components with mult torsors, one node carrying F3, four tails carrying F1.
GlobalFixture f5(int p);
/// F5 where omega_2 vanishes at the node: node type (0,(mult,-1,0),(mult,-2,0)), three tails.
GlobalFixture f5_zero_at_node(int p);
/// F5 with the node datum replaced by F4 as printed (r=0) or F4 normalized (r=2).
GlobalFixture f5_second_case(int p, bool as_printed);
/// One etale line of genus 0 with a conductor-2 branch point carrying a mult tail with three
/// simple-pole branch points; r = 3. Needs p odd.
GlobalFixture marked_branch(int p);
/// One genus-2 mult component whose omega has a single double zero, in context (p, 3(p-1)).
/// Needs p >= 5.
GlobalFixture double_zero(int p);
/// Two split components of genera g1, g2 joined by a split node.
GlobalFixture split_everywhere(int p, int g1, int g2);

/// Names accepted by the fixture command.
std::vector<std::string> fixture_names();

}  // namespace degp::fixtures
