#include <algorithm>
#include <numeric>
#include <random>

#include "degp/degdata/encode.hpp"
#include "degp/degdata/json_io.hpp"
#include "degp/fixtures/fixtures.hpp"
#include "degp/validate/validate.hpp"
#include "doctest.h"

using namespace degp;
using namespace degp::degdata;

namespace {

Label small_label(std::mt19937_64& rng) {
  static const Label pool[] = {{0, 0}, {1, 0}, {-1, 0}, {2, 0}};
  return pool[rng() % 4];
}

// Random (not necessarily valid) simple datum on n vertices; small alphabets make
// accidental symmetries frequent.
SimpleDegData random_simple(std::size_t n, std::mt19937_64& rng) {
  SimpleDegData d;
  d.r = 1;
  d.boundary = {GroupKind::Mult, -1, 0};
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v;
    v.torsor = SymbolicTorsor{rng() % 2 ? GroupKind::Etale : GroupKind::Mult};
    v.delta = static_cast<int>(rng() % 2) * 2;
    if (rng() % 3 == 0) v.marked.push_back({std::nullopt, small_label(rng), static_cast<int>(rng() % 2) + 1});
    d.tree.vertices.push_back(v);
  }
  for (std::size_t i = 1; i < n; ++i) {
    Label l = small_label(rng);
    d.tree.edges.push_back({rng() % i, i, 3 * static_cast<int>(1 + rng() % 2), {l, {}}, {{-l.m, 0}, {}}});
  }
  d.origin = {rng() % n, {1, 0}, std::nullopt, 3};
  return d;
}

// Same datum with vertices permuted, edges shuffled and reoriented, marked points shuffled.
SimpleDegData relabel(const SimpleDegData& d, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(d.tree.vertices.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  SimpleDegData out = d;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.tree.vertices[perm[i]] = d.tree.vertices[i];
    std::shuffle(out.tree.vertices[perm[i]].marked.begin(), out.tree.vertices[perm[i]].marked.end(), rng);
  }
  for (auto& e : out.tree.edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
    if (rng() % 2) {
      std::swap(e.u, e.v);
      std::swap(e.at_u, e.at_v);
    }
  }
  std::shuffle(out.tree.edges.begin(), out.tree.edges.end(), rng);
  out.origin.vertex = perm[d.origin.vertex];
  return out;
}

std::string vertex_sig(const Vertex& v) {
  std::vector<std::string> marked;
  for (const auto& m : v.marked) marked.push_back(label_key(m.label) + ":" + std::to_string(m.r) + "@" + place_key(m.location));
  std::sort(marked.begin(), marked.end());
  std::string s = torsor_tag(v.torsor) + "|" + std::to_string(v.delta) + "|" + std::to_string(v.genus) + "|" + torsor_key(v.torsor);
  for (const auto& m : marked) s += "|" + m;
  return s;
}

// Brute force over all vertex bijections.
bool brute_isomorphic(const SimpleDegData& a, const SimpleDegData& b) {
  const std::size_t n = a.tree.vertices.size();
  if (n != b.tree.vertices.size() || a.tree.edges.size() != b.tree.edges.size()) return false;
  auto anchor_sig = [](const Anchor& x) { return label_key(x.label) + place_key(x.location) + std::to_string(x.e); };
  if (anchor_sig(a.origin) != anchor_sig(b.origin)) return false;
  auto edge_set = [](const Tree& t, const std::vector<std::size_t>& map) {
    std::vector<std::string> out;
    for (const auto& e : t.edges) {
      std::string su = std::to_string(map[e.u]) + label_key(e.at_u.label) + place_key(e.at_u.location);
      std::string sv = std::to_string(map[e.v]) + label_key(e.at_v.label) + place_key(e.at_v.location);
      if (sv < su) std::swap(su, sv);
      out.push_back(su + "~" + sv + "~" + std::to_string(e.e));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  const auto target = edge_set(b.tree, id);
  std::vector<std::size_t> perm = id;
  do {
    if (perm[a.origin.vertex] != b.origin.vertex) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = vertex_sig(a.tree.vertices[i]) == vertex_sig(b.tree.vertices[perm[i]]);
    if (ok && edge_set(a.tree, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("canonical encoding is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto d = random_simple(2 + rng() % 6, rng);
    auto e = relabel(d, rng);
    REQUIRE(canonical_encode(d) == canonical_encode(e));
    auto w = isomorphism_witness(d, e);
    REQUIRE(w.has_value());
    for (std::size_t i = 0; i < w->size(); ++i) CHECK(vertex_sig(d.tree.vertices[i]) == vertex_sig(e.tree.vertices[(*w)[i]]));
  }
}

TEST_CASE("canonical encoding is sensitive to single fields") {
  auto fx = fixtures::f2(3);
  const auto base = canonical_encode(fx.data);
  auto differs = [&](auto mutate) {
    auto d = fx.data;
    mutate(d);
    return canonical_encode(d) != base;
  };
  CHECK(differs([](SimpleDegData& d) { d.r = 3; }));
  CHECK(differs([](SimpleDegData& d) { d.boundary.m = -2; }));
  CHECK(differs([](SimpleDegData& d) { d.tree.vertices[1].delta = 2; }));
  CHECK(differs([](SimpleDegData& d) { d.tree.vertices[1].marked[0].r = 1; }));
  CHECK(differs([](SimpleDegData& d) { d.tree.edges[0].e = 6; }));
  CHECK(differs([](SimpleDegData& d) { d.tree.edges[0].at_v.label = {1, 0}; }));
  CHECK(differs([](SimpleDegData& d) { d.origin.e = 3; }));
  CHECK(differs([](SimpleDegData& d) { d.species = Species::Split; }));
  CHECK(differs([](SimpleDegData& d) { d.tree.vertices[0].torsor = SymbolicTorsor{GroupKind::Add}; }));
}

TEST_CASE("the origin is distinguished") {
  auto fx = fixtures::f2(3);
  auto d = fx.data;
  // move the origin onto the other line and the marked point onto the first: same shape, other root
  std::swap(d.tree.vertices[0].marked, d.tree.vertices[1].marked);
  d.origin.vertex = 1;
  auto e = fx.data;
  e.tree.vertices[0].marked = {{std::nullopt, {1, 0}, 2}};
  CHECK(canonical_encode(d) != canonical_encode(e));
  CHECK(canonical_encode(d) == canonical_encode(fx.data));
}

TEST_CASE("encoding agrees with a brute-force matcher") {
  std::mt19937_64 rng(5);
  std::vector<SimpleDegData> pool;
  for (int i = 0; i < 25; ++i) {
    auto d = random_simple(5, rng);
    pool.push_back(d);
    pool.push_back(rng() % 2 ? relabel(d, rng) : random_simple(5, rng));
  }
  int iso = 0, non = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) {
      bool brute = brute_isomorphic(pool[i], pool[j]);
      REQUIRE(brute == is_isomorphic(pool[i], pool[j]));
      (brute ? iso : non)++;
    }
  CHECK(iso > 50);
  CHECK(non > 50);
}

TEST_CASE("isomorphism across types is a structure error") {
  auto a = fixtures::f2(3).data, b = a;
  b.r = 1;
  CHECK_THROWS_AS(is_isomorphic(a, b), StructureError);
}

TEST_CASE("json round trip") {
  auto check_simple_rt = [](const fixtures::SimpleFixture& fx) {
    auto j = to_json(fx.data);
    auto back = simple_from_json(j, fx.ctx);
    CHECK(back == fx.data);
    CHECK(to_json(back).dump() == j.dump());
  };
  check_simple_rt(fixtures::f1(3));
  check_simple_rt(fixtures::f2(5));
  check_simple_rt(fixtures::f2_concrete());
  for (auto fx : {fixtures::f3(3), fixtures::f4_normalized(5), fixtures::trivial_chain(7, 3, 2)}) {
    auto j = to_json(fx.data);
    CHECK(double_from_json(j, fx.ctx) == fx.data);
  }
  for (auto fx : {fixtures::f5(3), fixtures::marked_branch(5), fixtures::split_everywhere(3, 1, 1), fixtures::double_zero(5)}) {
    auto j = to_json(fx.data);
    auto back = global_from_json(j, fx.ctx);
    CHECK(back == fx.data);
    CHECK(canonical_encode(back) == canonical_encode(fx.data));
  }
}

TEST_CASE("odd thickness parses and fails validation") {
  auto fx = fixtures::f2(3);
  auto j = to_json(fx.data);
  j["edges"][0]["e"] = 7;
  auto d = simple_from_json(j, fx.ctx);
  CHECK(d.tree.edges[0].e == 7);
  CHECK_FALSE(validate::check_simple(fx.ctx, d).find("A7")->pass);
}

TEST_CASE("parse errors carry a path") {
  auto fx = fixtures::f2(3);
  auto j = to_json(fx.data);
  j["edges"][0].erase("e");
  try {
    simple_from_json(j, fx.ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.path() == "$.edges[0].e");
  }
  auto k = to_json(fx.data);
  k["vertices"][1]["colour"] = "red";
  CHECK_THROWS_AS(simple_from_json(k, fx.ctx), ParseError);
  auto text = to_json(fx.data).dump();
  auto truncated = [&] {
    auto parsed = json::parse(text.substr(0, text.size() / 2));
    return parsed.size();
  };
  CHECK_THROWS_AS(truncated(), json::parse_error);
  auto bad = to_json(fx.data);
  bad["vertices"][0]["torsor"] = {{"type", "rep"}, {"kind", "etale"}, {"rep", {{"field_degree", 1}, {"num", {0}}}}};
  CHECK_THROWS_AS(simple_from_json(bad, fx.ctx), ParseError);
}
