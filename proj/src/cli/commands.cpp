#include <functional>
#include <iostream>

#include "degp/cli/cli.hpp"
#include "degp/degdata/encode.hpp"
#include "degp/fiber/fiber.hpp"
#include "degp/fixtures/fixtures.hpp"
#include "degp/validate/validate.hpp"
#include "CLI11.hpp"

namespace degp::cli {

namespace {

/// Runs `body`, mapping input problems to exit 2 and realization problems to exit 1.
int guarded(Streams io, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const degdata::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const degdata::StructureError& e) {
    io.err << "error: " << e.what() << "\n";
  } catch (const fiber::RealizationError& e) {
    io.err << "realization failed at " << e.what() << "\n";
    return kSemantic;
  } catch (const galois::ExtractionError& e) {
    io.err << "extraction failed: " << e.what() << "\n";
    return kSemantic;
  } catch (const torsor::TorsorError& e) {
    io.err << "error: " << e.what() << "\n";
  }
  return kInput;
}

struct Datum {
  std::optional<degdata::SimpleDegData> simple;
  std::optional<degdata::DoubleDegData> dbl;
  std::optional<degdata::GlobalDegData> global;
};

Datum datum_of(const Document& doc) {
  Datum d;
  if (doc.kind == "simple") d.simple = degdata::simple_from_json(doc.payload, doc.ctx, "$.simple");
  else if (doc.kind == "double") d.dbl = degdata::double_from_json(doc.payload, doc.ctx, "$.double");
  else if (doc.kind == "global") d.global = degdata::global_from_json(doc.payload, doc.ctx, "$.global");
  else throw InputError("expected a simple, double or global payload, got " + doc.kind);
  return d;
}

validate::ValidationReport check(const Document& doc, const Datum& d) {
  if (d.simple) return validate::check_simple(doc.ctx, *d.simple);
  if (d.dbl) return validate::check_double(doc.ctx, *d.dbl);
  return validate::check_global(doc.ctx, *d.global);
}

galois::GaloisElement sigma_for(const degdata::PrimeContext& ctx, std::uint64_t q) {
  if (q == 0) return galois::GaloisElement::frobenius();
  std::uint32_t k = 0;
  std::uint64_t v = q;
  while (v > 1 && v % static_cast<std::uint64_t>(ctx.p) == 0) {
    v /= static_cast<std::uint64_t>(ctx.p);
    ++k;
  }
  if (v != 1 || k == 0) throw InputError("--frobenius " + std::to_string(q) + " is not a power of p = " + std::to_string(ctx.p));
  return galois::GaloisElement::frobenius(k);
}

}  // namespace

validate::ValidationReport check_document(const Document& doc) { return check(doc, datum_of(doc)); }

int cmd_validate(const std::string& path, bool as_json, Streams io) {
  return guarded(io, [&] {
    auto doc = read_document(path);
    auto rep = check_document(doc);
    if (as_json)
      io.out << rep.to_json().dump(2) << "\n";
    else
      io.out << rep.to_text();
    return rep.ok() ? kOk : kSemantic;
  });
}

int cmd_realize(const std::string& path, bool as_dot, Streams io) {
  return guarded(io, [&] {
    auto doc = read_document(path);
    auto d = datum_of(doc);
    auto rep = check(doc, d);
    if (!rep.ok()) {
      io.err << rep.to_text();
      return kSemantic;
    }
    if (d.global) {
      auto fib = fiber::realize_global(doc.ctx, *d.global);
      auto cons = fiber::conservation_check(doc.ctx, *d.global);
      if (as_dot) {
        io.out << fiber::to_dot(fib);
      } else {
        json payload = fiber::to_json(fib);
        json diags = json::array();
        for (const auto& dg : cons.diagnostics) diags.push_back({{"location", dg.location}, {"message", dg.message}});
        payload["conservation"] = {{"expected", cons.expected}, {"realized", cons.realized}, {"ok", cons.ok}, {"diagnostics", diags}};
        io.out << make_document(doc.ctx, "fiber", payload).dump(2) << "\n";
      }
      for (const auto& dg : cons.diagnostics) io.err << "conservation: " << dg.location << ": " << dg.message << "\n";
      return cons.ok ? kOk : kSemantic;
    }
    auto frag = d.simple ? fiber::realize_simple(doc.ctx, *d.simple) : fiber::realize_double(doc.ctx, *d.dbl);
    if (as_dot)
      io.out << fiber::to_dot(frag);
    else
      io.out << make_document(doc.ctx, "fiber", fiber::to_json(frag)).dump(2) << "\n";
    return kOk;
  });
}

int cmd_render(const std::string& path, Streams io) { return cmd_realize(path, true, io); }

int cmd_enumerate(const degdata::PrimeContext& ctx, const galois::EnumBounds& bounds, bool double_data, bool count_only,
                  Streams io) {
  return guarded(io, [&] {
    if (bounds.max_vertices < 0 || bounds.max_conductor < 0 || bounds.max_thickness < 0 || bounds.max_marked < 0)
      throw InputError("bounds must be nonnegative");
    std::size_t n = 0;
    auto emit = [&](const std::string& kind, json payload) {
      ++n;
      if (!count_only) io.out << make_document(ctx, kind, std::move(payload)).dump() << "\n";
    };
    if (double_data)
      for (const auto& d : galois::enum_double(ctx, bounds)) emit("double", degdata::to_json(d));
    else
      for (const auto& d : galois::enum_simple(ctx, bounds)) emit("simple", degdata::to_json(d));
    if (count_only) io.out << n << "\n";
    return kOk;
  });
}

int cmd_orbit(const std::string& path, std::uint64_t frobenius_q, Streams io) {
  return guarded(io, [&] {
    auto doc = read_document(path);
    auto sigma = sigma_for(doc.ctx, frobenius_q);
    std::vector<std::string> orb;
    if (doc.kind == "cover") {
      auto g = galois::extract_degdata(doc.ctx, cover_from_json(doc.payload, doc.ctx));
      orb = galois::orbit(sigma, g);
    } else {
      auto d = datum_of(doc);
      orb = d.simple ? galois::orbit(sigma, *d.simple) : d.dbl ? galois::orbit(sigma, *d.dbl) : galois::orbit(sigma, *d.global);
    }
    io.out << json{{"sigma", sigma.to_string()}, {"size", orb.size()}, {"orbit", orb}}.dump(2) << "\n";
    return kOk;
  });
}

int cmd_equivariance(const std::string& path, std::uint64_t frobenius_q, Streams io) {
  return guarded(io, [&] {
    auto doc = read_document(path);
    if (doc.kind != "cover") throw InputError("equivariance needs a cover payload, got " + doc.kind);
    auto cover = cover_from_json(doc.payload, doc.ctx);
    auto sigma = sigma_for(doc.ctx, frobenius_q);
    const bool ok = galois::equivariance_check(doc.ctx, sigma, cover);
    io.out << (ok ? "commutes" : "does not commute") << " under " << sigma.to_string() << "\n";
    return ok ? kOk : kSemantic;
  });
}

int cmd_fixture(const std::string& name, int p, Streams io) {
  return guarded(io, [&] {
    try {
      io.out << fixture_document(name, p).dump(2) << "\n";
    } catch (const std::exception& e) {
      throw InputError(e.what());
    }
    return kOk;
  });
}

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"degp: degeneration data of degree-p covers"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false, as_dot = false, dbl = false, count = false;
  std::uint64_t q = 0;
  int p = 3, vkp = 0;
  galois::EnumBounds bounds;
  std::string name;

  auto* validate_cmd = app.add_subcommand("validate", "check every axiom and print the report");
  validate_cmd->add_option("file", path, "document ('-' for stdin)")->required();
  validate_cmd->add_flag("--json", as_json, "print the report as JSON");

  auto* realize_cmd = app.add_subcommand("realize", "assemble the special fiber");
  realize_cmd->add_option("file", path, "document ('-' for stdin)")->required();
  realize_cmd->add_flag("--dot", as_dot, "print DOT instead of JSON");

  auto* render_cmd = app.add_subcommand("render", "DOT picture of the special fiber");
  render_cmd->add_option("file", path, "document ('-' for stdin)")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "valid data within bounds, one JSON document per line");
  enum_cmd->add_option("--p", p, "residue characteristic")->default_val(3);
  enum_cmd->add_option("--vkp", vkp, "v_K(p); default 2(p-1)");
  enum_cmd->add_option("--vertices", bounds.max_vertices, "maximum number of vertices")->default_val(1);
  enum_cmd->add_option("--max-m", bounds.max_conductor, "bound on |m|")->default_val(1);
  enum_cmd->add_option("--max-t", bounds.max_thickness, "bound on t = e/p")->default_val(1);
  enum_cmd->add_option("--max-marked", bounds.max_marked, "marked points per vertex")->default_val(1);
  enum_cmd->add_flag("--double", dbl, "enumerate double data");
  enum_cmd->add_flag("--count", count, "print only the number of classes");

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a datum under a Frobenius");
  orbit_cmd->add_option("file", path, "document ('-' for stdin)")->required();
  orbit_cmd->add_option("--frobenius", q, "q for sigma = (x -> x^q); default p");

  auto* eq_cmd = app.add_subcommand("equivariance", "check extract(sigma cover) = sigma extract(cover)");
  eq_cmd->add_option("file", path, "cover document ('-' for stdin)")->required();
  eq_cmd->add_option("--frobenius", q, "q for sigma = (x -> x^q); default p");

  auto* fixture_cmd = app.add_subcommand("fixture", "print a stored example as a document");
  fixture_cmd->add_option("name", name, "fixture name")->required()->check(CLI::IsMember(fixtures::fixture_names()));
  fixture_cmd->add_option("--p", p, "residue characteristic")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return kInput;
  }

  if (*validate_cmd) return cmd_validate(path, as_json, io);
  if (*realize_cmd) return cmd_realize(path, as_dot, io);
  if (*render_cmd) return cmd_render(path, io);
  if (*orbit_cmd) return cmd_orbit(path, q, io);
  if (*eq_cmd) return cmd_equivariance(path, q, io);
  if (*fixture_cmd) return cmd_fixture(name, p, io);
  return guarded(io, [&] {
    auto ctx = degdata::PrimeContext::make(p, vkp ? vkp : 2 * (p - 1));
    return cmd_enumerate(ctx, bounds, dbl, count, io);
  });
}

int run(const std::vector<std::string>& args, Streams io) {
  std::vector<const char*> argv{"degp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), io);
}

}  // namespace degp::cli
