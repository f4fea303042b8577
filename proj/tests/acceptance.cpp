// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "degp/cli/cli.hpp"
#include "degp/degdata/encode.hpp"
#include "degp/fiber/fiber.hpp"
#include "degp/fixtures/fixtures.hpp"
#include "degp/galois/galois.hpp"
#include "degp/torsor/torsor.hpp"
#include "degp/validate/validate.hpp"
#include "mutations.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace degp;
using degdata::PrimeContext;
using torsor::GroupKind;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_s;  // 0: no runtime limit
  std::function<Outcome()> body;
};

// 1. Stored fixtures validate; each axiom has a stored single-field mutation killing it.
Outcome fixture_suite() {
  Outcome o;
  for (int p : {3, 5}) {
    auto ctx = fixtures::standard_context(p);
    for (auto fx : {fixtures::f1(p), fixtures::one_line(p, 2), fixtures::one_line(p, 4), fixtures::f2(p)})
      o.require(validate::check_simple(fx.ctx, fx.data).ok(), "a simple fixture fails at p=" + std::to_string(p));
    auto f3 = fixtures::f3(p);
    o.require(validate::check_double(f3.ctx, f3.data).ok(), "F3 fails at p=" + std::to_string(p));
    auto f5 = fixtures::f5(p);
    o.require(validate::check_global(f5.ctx, f5.data).ok(), "F5 fails at p=" + std::to_string(p));
  }
  const fs::path dir = fs::path(DEGP_FIXTURE_DIR) / "mutations";
  std::set<std::string> killed;
  int exact = 0, total = 0;
  std::string loose;
  for (const char* id : {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"}) {
    std::ifstream in(dir / (std::string(id) + ".json"));
    if (!in) {
      o.require(false, std::string("no stored mutation for ") + id);
      continue;
    }
    ++total;
    auto rep = cli::check_document(cli::parse_document(cli::json::parse(in)));
    auto failed = rep.failed();
    const bool first = !failed.empty() && failed.front() == id;
    o.require(first, std::string("stored mutation for ") + id + " is not first caught by " + id);
    if (first) killed.insert(id);
    if (failed == std::vector<std::string>{id})
      ++exact;
    else
      loose += std::string(loose.empty() ? "" : ",") + id;
  }
  if (o.pass)
    o.detail = "fixtures valid for p=3,5; " + std::to_string(killed.size()) + "/17 axioms killed first by their mutation, " +
               std::to_string(exact) + "/" + std::to_string(total) + " in isolation (also failing a later axiom: " + loose + ")";
  return o;
}

// 2. realize_simple(F2): two genus-0 components and b1 = p-1.
Outcome cycle_count() {
  Outcome o;
  for (int p : {2, 3, 5, 7}) {
    auto fx = fixtures::f2(p);
    auto f = fiber::realize_simple(fx.ctx, fx.data);
    o.require(f.components.size() == 2 && f.components[0].genus == 0 && f.components[1].genus == 0,
              "F2 does not realize to two lines at p=" + std::to_string(p));
    o.require(f.b1() == p - 1, "b1(F2) = " + std::to_string(f.b1()) + " at p=" + std::to_string(p));
  }
  if (o.pass) o.detail = "2 lines, b1 = p-1 for p = 2,3,5,7";
  return o;
}

// 3. Every numeric genus in the text, from the closed forms.
Outcome genus_table() {
  Outcome o;
  int rows = 0;
  for (int p : {3, 5, 7, 11}) {
    auto ctx = fixtures::standard_context(p);
    const std::string at = " at p=" + std::to_string(p);
    o.require(validate::genus_simple(ctx, 0, -2) == (p - 1) / 2, "one-line example" + at);
    // a line whose boundary point has conductor m'-m+1 has genus (m'-m)(p-1)/2
    for (int diff = 0; diff <= 6; ++diff) {
      const int conductor = diff + 1;
      if (conductor % p == 0) continue;
      auto line = fixtures::one_line(p, conductor);
      const int want = diff * (p - 1) / 2;
      o.require(validate::genus_simple(line.ctx, 0, -conductor) == want, "m'-m = " + std::to_string(diff) + at);
      o.require(fiber::realize_simple(line.ctx, line.data).arithmetic_genus() == want, "realized line, m'-m = " + std::to_string(diff) + at);
      ++rows;
    }
    o.require(validate::genus_double(ctx, 0, -1, -1) == p - 1, "double type (-1,-1)" + at);
    o.require(validate::genus_double(ctx, 0, -1, -2) * 2 == 3 * (p - 1), "double type (-1,-2)" + at);
    o.require(validate::genus_double(ctx, 0, -2, -2) == 2 * (p - 1), "double type (-2,-2)" + at);
    for (int m = -6; m <= -1; ++m) o.require(validate::genus_tail(ctx, m) * 2 == (-m - 1) * (p - 1), "tail m=" + std::to_string(m) + at);
    o.require(validate::genus_tail(ctx, -2) == (p - 1) / 2, "tail m=-2" + at);
    rows += 5;
  }
  if (o.pass) o.detail = std::to_string(rows) + " exact integer matches for p = 3,5,7,11";
  return o;
}

// 4. Conservation on F5 and the genus identity over the bounded enumeration.
Outcome conservation() {
  Outcome o;
  auto f5 = fixtures::f5(3);
  auto s = fiber::realize_global(f5.ctx, f5.data);
  auto res = fiber::conservation_check(f5.ctx, f5.data);
  const int gX = 2 + 2;
  o.require(s.total_genus == 10 && s.total_genus == 3 * (gX - 1) + 1, "F5 realizes to genus " + std::to_string(s.total_genus));
  o.require(res.ok && res.expected == 10, "F5 conservation ledger does not close");

  auto ctx = fixtures::standard_context(3);
  const galois::EnumBounds bounds{3, 4, 1, 2};
  std::size_t n = 0;
  for (const auto& d : galois::enum_simple(ctx, bounds)) {
    auto f = fiber::realize_simple(ctx, d);
    o.require(2 * f.arithmetic_genus() == validate::deg8_rhs_twice(ctx, d.tree, {d.origin}),
              "simple datum " + degdata::canonical_encode(d) + " breaks the genus identity");
    o.require(f.arithmetic_genus() == validate::genus_simple(ctx, d.r, d.boundary.m), "simple datum genus differs from its type");
    ++n;
  }
  for (const auto& d : galois::enum_double(ctx, bounds)) {
    auto f = fiber::realize_double(ctx, d);
    o.require(2 * f.arithmetic_genus() == validate::deg8_rhs_twice(ctx, d.tree, {d.end1, d.end2}),
              "double datum " + degdata::canonical_encode(d) + " breaks the genus identity");
    o.require(f.arithmetic_genus() == validate::genus_double(ctx, d.r, d.boundary1.m, d.boundary2.m), "double datum genus differs from its type");
    ++n;
  }
  if (o.pass) o.detail = "F5 total genus 10; " + std::to_string(n) + " enumerated data (p=3, <=3 vertices, |m|<=4) agree";
  return o;
}

// 5. Artin-Schreier reduction, canonical degree of omega, conductor rule at zeros.
Outcome torsor_kernel() {
  using namespace testsupport;
  Outcome o;
  std::mt19937_64 rng(5);
  int reduced = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
    FieldRef F = field_make(p, 1 + trial % 2);
    auto g = random_function(F, 4, rng);
    auto a = random_function(F, 2, rng);
    auto base = torsor::as_reduce(g);
    auto shifted = torsor::as_reduce(g + (a.pow(static_cast<int>(p)) - a) + RationalFunction::constant(random_element(F, rng)));
    o.require(base.has_value() == shifted.has_value(), "as_reduce triviality is not a class function");
    if (!base || !shifted) continue;
    ++reduced;
    o.require(*base == *shifted, "as_reduce is not class-invariant on " + g.to_string());
    o.require(torsor::as_reduce(*base) == base, "as_reduce is not idempotent on " + g.to_string());
  }
  int kummer = 0;
  for (int trial = 0; kummer < 100; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[trial % 3];
    FieldRef F = field_make(p, 1 + trial % 2);
    auto f = random_function(F, 4, rng);
    if (!torsor::kummer_reduce(f)) continue;
    auto T = torsor::TorsorRep::make(GroupKind::Mult, f);
    int total = 0;
    for (auto& [z, k] : torsor::differential_divisor(torsor::omega(T))) total += k;
    o.require(total == -2, "sum of ord(omega) = " + std::to_string(total) + " for " + f.to_string());
    ++kummer;
  }
  // omega of t^2 + 1 over F_3 is 2t/(t^2+1) dt: a simple zero at 0
  FieldRef F3 = field_make(3, 1);
  auto K = torsor::TorsorRep::make(GroupKind::Mult, RationalFunction(P(F3, {1, 0, 1})));
  auto at = [&](int a) { return Place::from_element(Fq::from_int(F3, a)); };
  o.require(torsor::conductor_residue_at(K, at(0)).m == -2, "zero of omega does not give m=-2");
  o.require(torsor::conductor_residue_at(K, at(1)).m == -1, "regular point does not give m=-1");
  o.require(torsor::conductor_residue_at(K, at(2)).m == -1, "regular point does not give m=-1");
  if (o.pass)
    o.detail = std::to_string(reduced) + "/100 nontrivial classes reduced consistently; 100 Kummer divisors of degree -2; t^2+1 gives m=-2 at its zero and -1 at regular points";
  return o;
}

// 6. extract . sigma = act(sigma) . extract on random covers.
Outcome equivariance() {
  Outcome o;
  int covers = 0;
  for (int p : {3, 5}) {
    auto ctx = fixtures::standard_context(p);
    std::mt19937_64 rng(60 + p);
    for (int trial = 0; trial < 100; ++trial) {
      auto cover = galois::random_cover(ctx, rng);
      auto before = galois::extract_degdata(ctx, cover);
      for (std::uint64_t k : {1u, 2u, 3u}) {
        auto sigma = galois::GaloisElement::frobenius(static_cast<std::uint32_t>(k));
        o.require(galois::equivariance_check(ctx, sigma, cover), "square does not commute at p=" + std::to_string(p));
        auto after = galois::extract_degdata(ctx, galois::act(sigma, cover));
        std::multiset<std::pair<int, int>> a, b;
        for (const auto& c : before.components)
          for (const auto& pt : c.points) a.insert({pt.label.m, pt.label.h});
        for (const auto& c : after.components)
          for (const auto& pt : c.points) b.insert({pt.label.m, pt.label.h});
        o.require(a == b, "numeric labels moved under sigma at p=" + std::to_string(p));
        o.require(after.r == before.r, "branch count moved under sigma");
      }
      ++covers;
    }
  }
  if (o.pass) o.detail = std::to_string(covers) + " random covers over F_9 and F_25, sigma = Frob^1,2,3; labels fixed";
  return o;
}

// 7. Bounded enumeration against the brute-force oracle.
Outcome enumeration() {
  Outcome o;
  auto ctx = fixtures::standard_context(3);
  const galois::EnumBounds bounds{2, 2, 1, 1};
  auto got = galois::enum_simple(ctx, bounds);
  auto ref = oracle::brute_force_simple(ctx, 2, 2);
  std::set<std::string> a, b;
  for (const auto& d : got) a.insert(degdata::canonical_encode(d));
  for (const auto& d : ref) b.insert(degdata::canonical_encode(d));
  o.require(got.size() == ref.size(), "count " + std::to_string(got.size()) + " vs oracle " + std::to_string(ref.size()));
  o.require(a == b, "encoding sets differ from the oracle");
  std::ostringstream run1, run2, err;
  cli::cmd_enumerate(ctx, bounds, false, false, {run1, err});
  cli::cmd_enumerate(ctx, bounds, false, false, {run2, err});
  o.require(!run1.str().empty() && run1.str() == run2.str(), "repeated runs differ");
  if (o.pass) o.detail = std::to_string(got.size()) + " classes, equal to the oracle in count and encodings; output byte-identical across runs";
  return o;
}

// 8. The printed second case is caught by the ledger at the node; the normalized one closes.
Outcome guardrails() {
  Outcome o;
  auto printed = fixtures::f5_second_case(3, true);
  auto bad = fiber::conservation_check(printed.ctx, printed.data);
  o.require(!bad.ok, "printed second case passes the conservation ledger");
  o.require(!bad.diagnostics.empty() && bad.diagnostics.front().location == "nodes[0]", "diagnostic is not located at nodes[0]");
  auto norm = fiber::conservation_check(fixtures::f5_second_case(3, false).ctx, fixtures::f5_second_case(3, false).data);
  o.require(norm.ok && norm.diagnostics.empty(), "normalized second case fails the ledger");
  auto local = fixtures::f4_as_printed(3);
  o.require(!validate::check_double(local.ctx, local.data).ok(), "printed local datum validates");
  auto fixed = fixtures::f4_normalized(3);
  o.require(validate::check_double(fixed.ctx, fixed.data).ok(), "normalized local datum fails");
  if (o.pass)
    o.detail = "printed: expected " + std::to_string(bad.expected) + ", realized " + std::to_string(bad.realized) + " at " +
               bad.diagnostics.front().location + "; normalized (r_x = 2) closes at " + std::to_string(norm.expected);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "fixture suite and killing mutations", 5.0, fixture_suite},
      {2, "cycle count of the two-line fragment", 0.0, cycle_count},
      {3, "genus table", 0.0, genus_table},
      {4, "conservation and the genus identity", 60.0, conservation},
      {5, "torsor kernel", 0.0, torsor_kernel},
      {6, "equivariance of extraction", 30.0, equivariance},
      {7, "enumeration soundness", 0.0, enumeration},
      {8, "known-discrepancy guardrails", 0.0, guardrails},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.require(false, "runtime over the limit");
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s" << (c.limit_s > 0 ? " / limit " + std::to_string(static_cast<int>(c.limit_s)) + " s" : "");
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << " [" << time.str() << "]: " << o.detail << "\n";
    if (!o.pass) ++failures;
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria pass") << "\n";
  return failures ? 1 : 0;
}
