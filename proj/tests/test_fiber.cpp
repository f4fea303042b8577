#include <algorithm>
#include <numeric>
#include <random>

#include "degp/fiber/fiber.hpp"
#include "degp/fixtures/fixtures.hpp"
#include "degp/validate/validate.hpp"
#include "doctest.h"

using namespace degp;
using namespace degp::fiber;
using degdata::PrimeContext;
using degdata::SymbolicTorsor;
using torsor::GroupKind;

namespace {

std::vector<int> genera(const std::vector<FiberComponent>& cs) {
  std::vector<int> g;
  for (const auto& c : cs) g.push_back(c.genus);
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

TEST_CASE("realize a single vertex") {
  auto c3 = PrimeContext::make(3, 4);
  auto et = SymbolicTorsor{GroupKind::Etale};
  auto r = realize_vertex(c3, et, 0, {{2, 0}}, "v");
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].genus == 1);
  CHECK(realize_vertex(c3, et, 0, {{1, 0}, {1, 0}}, "v").components[0].genus == 2);
  auto s = realize_vertex(c3, et, 0, {{1, 0}, {0, 0}}, "v");
  CHECK(s.components[0].genus == 0);
  CHECK(s.preimages[0].size() == 1);
  CHECK(s.preimages[1].size() == 3);
  auto split = realize_vertex(c3, degdata::SplitMarker{}, 2, {{0, 0}}, "v");
  CHECK(split.components.size() == 3);
  CHECK(genera(split.components) == std::vector<int>{2, 2, 2});
  CHECK(split.preimages[0] == std::vector<std::size_t>{0, 1, 2});
  auto mult = realize_vertex(c3, SymbolicTorsor{GroupKind::Mult}, 2, {{-2, 0}, {-2, 0}}, "v");
  CHECK(mult.components[0].genus == 2);
  CHECK(mult.preimages[1].size() == 1);
  // an etale cover of a line with no pole would be disconnected; the formula gives genus 1-p
  CHECK_THROWS_AS(realize_vertex(c3, et, 0, {}, "v"), RealizationError);
}

TEST_CASE("local fragments") {
  auto f1 = fixtures::f1(3);
  auto a = realize_simple(f1.ctx, f1.data);
  CHECK(a.components.size() == 1);
  CHECK(a.components[0].genus == 1);
  CHECK(a.edges.empty());
  CHECK(a.boundaries.size() == 1);
  CHECK(a.boundaries[0].size() == 1);

  auto f2 = fixtures::f2(3);
  auto b = realize_simple(f2.ctx, f2.data);
  CHECK(genera(b.components) == std::vector<int>{0, 0});
  CHECK(b.edges.size() == 3);
  CHECK(b.b1() == 2);
  CHECK(b.boundaries[0].size() == 1);

  for (int p : {3, 5, 7})
    for (int m : {2, 3, 4}) {
      if (m % p == 0) continue;
      auto fx = fixtures::one_line(p, m);
      auto f = realize_simple(fx.ctx, fx.data);
      CHECK(f.components.size() == 1);
      CHECK(f.arithmetic_genus() == (m - 1) * (p - 1) / 2);
    }

  auto f3 = fixtures::f3(3);
  auto c = realize_double(f3.ctx, f3.data);
  CHECK(genera(c.components) == std::vector<int>{2});
  CHECK(c.boundaries.size() == 2);
  CHECK(c.boundaries[0].size() == 1);
  CHECK(c.boundaries[1].size() == 1);

  auto chain = fixtures::trivial_chain(5, 4, 2);
  auto ch = realize_double(chain.ctx, chain.data);
  CHECK(genera(ch.components) == std::vector<int>{0, 0, 0, 0});
  CHECK(ch.b1() == 0);
  CHECK(ch.arithmetic_genus() == 0);
}

TEST_CASE("b1 of the two-line fragment is p-1") {
  for (int p : {2, 3, 5, 7}) {
    auto fx = fixtures::f2(p);
    CHECK(realize_simple(fx.ctx, fx.data).b1() == p - 1);
  }
}

TEST_CASE("second case: printed versus normalized") {
  for (int p : {3, 5}) {
    auto f4 = fixtures::f4(p);
    CHECK(realize_double(f4.ctx, f4.data).arithmetic_genus() == p - 1);
    auto norm = fixtures::f4_normalized(p);
    auto fn = realize_double(norm.ctx, norm.data);
    CHECK(fn.arithmetic_genus() == 2 * (p - 1));
    CHECK(fn.arithmetic_genus() == validate::genus_double(norm.ctx, 2, -1, -1));
    auto printed = fixtures::f4_as_printed(p);
    auto fp = realize_double(printed.ctx, printed.data);
    CHECK(genera(fp.components) == std::vector<int>{(p - 1) / 2, (p - 1) / 2});
    CHECK(fp.arithmetic_genus() == 2 * (p - 1));
    CHECK(fp.arithmetic_genus() != validate::genus_double(printed.ctx, 0, -1, -1));
  }
}

TEST_CASE("local ledgers close on the fixtures") {
  for (int p : {3, 5, 7}) {
    for (auto fx : {fixtures::f1(p), fixtures::f2(p)})
      CHECK(realize_simple(fx.ctx, fx.data).arithmetic_genus() == validate::genus_simple(fx.ctx, fx.data.r, fx.data.boundary.m));
    for (auto fx : {fixtures::f3(p), fixtures::f4(p), fixtures::f4_normalized(p), fixtures::trivial_chain(p, 2, 1)})
      CHECK(realize_double(fx.ctx, fx.data).arithmetic_genus() ==
            validate::genus_double(fx.ctx, fx.data.r, fx.data.boundary1.m, fx.data.boundary2.m));
  }
}

TEST_CASE("global realization of the two-component example") {
  auto fx = fixtures::f5(3);
  auto s = realize_global(fx.ctx, fx.data);
  CHECK(genera(s.components) == std::vector<int>{1, 1, 1, 1, 2, 2, 2});
  CHECK(s.b1 == 0);
  CHECK(s.total_genus == 10);
  CHECK(s.connected == 1);
  auto res = conservation_check(fx.ctx, fx.data);
  CHECK(res.ok);
  CHECK(res.expected == 10);
  CHECK(res.realized == 10);

  auto v = fixtures::f5_zero_at_node(3);
  CHECK(realize_global(v.ctx, v.data).total_genus == 10);
  CHECK(conservation_check(v.ctx, v.data).ok);

  auto f5 = fixtures::f5(5);
  auto r5 = conservation_check(f5.ctx, f5.data);
  CHECK(r5.ok);
  CHECK(r5.expected == 16);
}

TEST_CASE("conservation detects an extra branch point") {
  auto fx = fixtures::f5(3);
  fx.data.r = 1;
  auto res = conservation_check(fx.ctx, fx.data);
  CHECK(res.expected == 11);
  CHECK(res.realized == 10);
  CHECK_FALSE(res.ok);
}

TEST_CASE("conservation on the printed and normalized second case") {
  auto printed = fixtures::f5_second_case(3, true);
  auto res = conservation_check(printed.ctx, printed.data);
  CHECK_FALSE(res.ok);
  CHECK(res.expected == 10);
  CHECK(res.realized == 12);
  REQUIRE(res.diagnostics.size() == 1);
  CHECK(res.diagnostics[0].location == "nodes[0]");

  auto norm = fixtures::f5_second_case(3, false);
  auto ok = conservation_check(norm.ctx, norm.data);
  CHECK(ok.ok);
  CHECK(ok.expected == 12);
  CHECK(ok.diagnostics.empty());
}

TEST_CASE("split everywhere") {
  for (int p : {2, 3, 5}) {
    auto fx = fixtures::split_everywhere(p, 1, 2);
    auto s = realize_global(fx.ctx, fx.data);
    CHECK(s.total_genus == p * 3);
    CHECK(s.connected == p);
    CHECK(s.b1 == 0);
    auto res = conservation_check(fx.ctx, fx.data);
    CHECK(res.ok);
    CHECK(res.expected == 3);
  }
}

TEST_CASE("other global fixtures conserve genus") {
  for (int p : {3, 5, 7}) {
    auto mb = fixtures::marked_branch(p);
    auto res = conservation_check(mb.ctx, mb.data);
    CHECK(res.ok);
    CHECK(res.expected == (p - 1) / 2);
  }
  auto dz = fixtures::double_zero(5);
  auto res = conservation_check(dz.ctx, dz.data);
  CHECK(res.ok);
  CHECK(res.expected == 6);
}

TEST_CASE("stubs and splitting disagreements are located errors") {
  auto fx = fixtures::f5(3);
  fx.data.nodes[0].datum.reset();
  try {
    realize_global(fx.ctx, fx.data);
    FAIL("expected a realization error");
  } catch (const RealizationError& e) {
    CHECK(e.location() == "nodes[0]");
  }
  auto f2 = fixtures::f2(3);
  f2.data.tree.edges[0].at_v.label = {1, 0};
  CHECK_THROWS_AS(realize_simple(f2.ctx, f2.data), RealizationError);
}

TEST_CASE("realization does not depend on vertex order") {
  std::mt19937_64 rng(3);
  for (auto fx : {fixtures::f4_normalized(3), fixtures::trivial_chain(5, 4, 1)}) {
    auto base = realize_double(fx.ctx, fx.data);
    for (int trial = 0; trial < 20; ++trial) {
      auto d = fx.data;
      std::vector<std::size_t> perm(d.tree.vertices.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto e = d;
      for (std::size_t i = 0; i < perm.size(); ++i) e.tree.vertices[perm[i]] = d.tree.vertices[i];
      for (auto& ed : e.tree.edges) {
        ed.u = perm[ed.u];
        ed.v = perm[ed.v];
      }
      e.end1.vertex = perm[d.end1.vertex];
      e.end2.vertex = perm[d.end2.vertex];
      auto f = realize_double(fx.ctx, e);
      CHECK(genera(f.components) == genera(base.components));
      CHECK(f.b1() == base.b1());
      CHECK(f.edges.size() == base.edges.size());
    }
  }
}

TEST_CASE("fiber rendering") {
  auto fx = fixtures::f5(3);
  auto s = realize_global(fx.ctx, fx.data);
  auto j = to_json(s);
  CHECK(j["total_genus"] == 10);
  CHECK(j["components"].size() == 7);
  auto dot = to_dot(s);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("\"X1\" -- ") != std::string::npos);
}
