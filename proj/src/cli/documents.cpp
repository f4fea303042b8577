#include <fstream>
#include <iostream>
#include <sstream>

#include "degp/cli/cli.hpp"
#include "degp/fixtures/fixtures.hpp"

namespace degp::cli {

using degdata::ObjectReader;
using degdata::ParseError;

namespace {

const char* const kPayloads[] = {"simple", "double", "global", "cover", "fiber"};

}  // namespace

Document parse_document(const json& j) {
  if (!j.is_object()) throw ParseError("$", "expected a document object");
  ObjectReader r(j, "$", {"format_version", "prime_context"}, {"simple", "double", "global", "cover", "fiber"});
  const std::string version = r.get_string("format_version");
  if (version.substr(0, version.find('.')) != "1")
    throw ParseError(r.sub("format_version"), "unsupported format version " + version + " (this build reads 1.x)");
  ObjectReader pc(r.at("prime_context"), r.sub("prime_context"), {"p", "vKp"});
  Document doc;
  try {
    doc.ctx = degdata::PrimeContext::make(pc.get_int("p"), pc.get_int("vKp"));
  } catch (const degdata::StructureError& e) {
    throw ParseError(r.sub("prime_context"), e.what());
  }
  for (const char* k : kPayloads)
    if (r.find(k)) {
      if (!doc.kind.empty()) throw ParseError("$", "more than one payload (" + doc.kind + ", " + k + ")");
      doc.kind = k;
      doc.payload = *r.find(k);
    }
  if (doc.kind.empty()) throw ParseError("$", "missing payload: one of simple, double, global, cover, fiber");
  return doc;
}

Document read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
  return parse_document(j);
}

json make_document(const degdata::PrimeContext& ctx, const std::string& kind, json payload) {
  return json{{"format_version", kFormatVersion}, {"prime_context", {{"p", ctx.p}, {"vKp", ctx.vKp}}}, {kind, std::move(payload)}};
}

json cover_to_json(const galois::CoverDescription& c) {
  json comps = json::array();
  for (const auto& cc : c.components) {
    json jc{{"id", cc.id}, {"genus", cc.genus}};
    jc["torsor"] = cc.torsor ? degdata::torsor_to_json(*cc.torsor) : degdata::torsor_to_json(degdata::SplitMarker{});
    if (cc.delta) jc["delta"] = *cc.delta;
    comps.push_back(jc);
  }
  json nodes = json::array();
  auto pt = [](const galois::CoverPoint& q) { return json{{"component", q.component}, {"place", degdata::place_to_json(q.place)}}; };
  for (const auto& n : c.nodes) nodes.push_back(json{{"a", pt(n.a)}, {"b", pt(n.b)}});
  return json{{"components", comps}, {"nodes", nodes}};
}

galois::CoverDescription cover_from_json(const json& j, const degdata::PrimeContext& ctx, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  ObjectReader r(j, path, {"components"}, {"nodes"});
  galois::CoverDescription c;
  const json& cs = r.at("components");
  if (!cs.is_array()) throw ParseError(r.sub("components"), "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    ObjectReader cr(cs[i], degdata::index_path(r.sub("components"), i), {"id", "torsor"}, {"genus", "delta"});
    galois::CoverComponent cc;
    cc.id = cr.get_string("id");
    cc.genus = cr.get_int_or("genus", 0);
    if (cr.find("delta")) cc.delta = cr.get_int("delta");
    auto t = degdata::torsor_from_json(cr.at("torsor"), ctx.p, cr.sub("torsor"));
    if (const auto* rep = degdata::rep_of(t))
      cc.torsor = *rep;
    else if (!degdata::is_split(t))
      throw ParseError(cr.sub("torsor"), "a cover needs a representative or the split marker");
    c.components.push_back(std::move(cc));
  }
  if (const json* ns = r.find("nodes")) {
    if (!ns->is_array()) throw ParseError(r.sub("nodes"), "expected an array");
    for (std::size_t i = 0; i < ns->size(); ++i) {
      const std::string np = degdata::index_path(r.sub("nodes"), i);
      ObjectReader nr((*ns)[i], np, {"a", "b"});
      auto side = [&](const char* key) {
        ObjectReader sr(nr.at(key), nr.sub(key), {"component", "place"});
        int comp = sr.get_int("component");
        if (comp < 0 || static_cast<std::size_t>(comp) >= c.components.size())
          throw ParseError(sr.sub("component"), "no such component");
        return galois::CoverPoint{static_cast<std::size_t>(comp), degdata::place_from_json(sr.at("place"), ctx.p, sr.sub("place"))};
      };
      c.nodes.push_back({side("a"), side("b")});
    }
  }
  return c;
}

json fixture_document(const std::string& name, int p) {
  using namespace fixtures;
  auto simple = [](const SimpleFixture& f) { return make_document(f.ctx, "simple", degdata::to_json(f.data)); };
  auto dbl = [](const DoubleFixture& f) { return make_document(f.ctx, "double", degdata::to_json(f.data)); };
  auto global = [](const GlobalFixture& f) { return make_document(f.ctx, "global", degdata::to_json(f.data)); };
  if (name == "F1") return simple(f1(p));
  if (name == "one-line") return simple(one_line(p, 2));
  if (name == "F2") return simple(f2(p));
  if (name == "F2-concrete") return simple(f2_concrete());
  if (name == "F3") return dbl(f3(p));
  if (name == "F4") return dbl(f4(p));
  if (name == "F4-normalized") return dbl(f4_normalized(p));
  if (name == "F4-as-printed") return dbl(f4_as_printed(p));
  if (name == "trivial-chain") return dbl(trivial_chain(p, 3, 1));
  if (name == "F5") return global(f5(p));
  if (name == "F5-zero-at-node") return global(f5_zero_at_node(p));
  if (name == "F5-second-case") return global(f5_second_case(p, false));
  if (name == "F5-second-case-as-printed") return global(f5_second_case(p, true));
  if (name == "marked-branch") return global(marked_branch(p));
  if (name == "double-zero") return global(double_zero(p));
  if (name == "split-everywhere") return global(split_everywhere(p, 1, 2));
  throw InputError("unknown fixture " + name);
}

}  // namespace degp::cli
