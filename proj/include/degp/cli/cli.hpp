#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "degp/degdata/json_io.hpp"
#include "degp/galois/galois.hpp"
#include "degp/validate/validate.hpp"

namespace degp::cli {

using degdata::json;

inline constexpr const char* kFormatVersion = "1.0";

enum Exit : int { kOk = 0, kSemantic = 1, kInput = 2 };

/// Unreadable file, malformed JSON or bad flags: exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Top-level interchange object: {format_version, prime_context: {p, vKp}, <payload kind>: {...}}.
struct Document {
  degdata::PrimeContext ctx;
  /// "simple", "double", "global", "cover" or "fiber".
  std::string kind;
  json payload;
};

/// Checks the envelope only (version, context, exactly one payload, no unknown keys).
Document parse_document(const json& j);
/// Reads a file ("-" for stdin). Throws InputError or degdata::ParseError.
Document read_document(const std::string& path);
/// Parses the simple, double or global payload and runs the matching checker.
validate::ValidationReport check_document(const Document& doc);
json make_document(const degdata::PrimeContext& ctx, const std::string& kind, json payload);

json cover_to_json(const galois::CoverDescription& c);
galois::CoverDescription cover_from_json(const json& j, const degdata::PrimeContext& ctx, const std::string& path = "$.cover");

/// Stored fixture by name, as a document.
json fixture_document(const std::string& name, int p);

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

int cmd_validate(const std::string& path, bool as_json, Streams io);
int cmd_realize(const std::string& path, bool as_dot, Streams io);
int cmd_render(const std::string& path, Streams io);
int cmd_enumerate(const degdata::PrimeContext& ctx, const galois::EnumBounds& bounds, bool double_data, bool count_only,
                  Streams io);
/// `frobenius_q` is the size of the base field of sigma (x -> x^q); 0 means q = p.
int cmd_orbit(const std::string& path, std::uint64_t frobenius_q, Streams io);
int cmd_equivariance(const std::string& path, std::uint64_t frobenius_q, Streams io);
int cmd_fixture(const std::string& name, int p, Streams io);

/// Full command line, including argv[0].
int run(int argc, const char* const* argv, Streams io);
int run(const std::vector<std::string>& args, Streams io);

}  // namespace degp::cli
