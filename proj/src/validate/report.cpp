#include <algorithm>
#include <numeric>
#include <sstream>

#include "degp/validate/validate.hpp"

namespace degp::validate {

namespace {

int genus_from_twice(const PrimeContext& ctx, long long n, const char* what) {
  if (n < 0) throw GenusError(std::string(what) + ": negative genus");
  long long twice = n * (ctx.p - 1);
  if (twice % 2 != 0) throw GenusError(std::string(what) + ": genus is not an integer");
  return static_cast<int>(twice / 2);
}

}  // namespace

int genus_simple(const PrimeContext& ctx, int r, int m) {
  return genus_from_twice(ctx, static_cast<long long>(r) - m - 1, "genus_simple");
}

int genus_double(const PrimeContext& ctx, int r, int m1, int m2) {
  return genus_from_twice(ctx, static_cast<long long>(r) - m1 - m2, "genus_double");
}

int genus_tail(const PrimeContext& ctx, int m) {
  if (m >= 0) throw GenusError("genus_tail: m must be at most -1");
  return genus_from_twice(ctx, -static_cast<long long>(m) - 1, "genus_tail");
}

bool delta_in_range(const PrimeContext& ctx, int delta) {
  return delta >= 0 && delta <= ctx.vKp && delta % (ctx.p - 1) == 0;
}

GroupKind kind_from_delta(const PrimeContext& ctx, int delta) {
  if (!delta_in_range(ctx, delta))
    throw std::out_of_range("delta " + std::to_string(delta) + " outside [0, " + std::to_string(ctx.vKp) +
                            "] or not divisible by " + std::to_string(ctx.p - 1));
  if (delta == 0) return GroupKind::Etale;
  if (delta == ctx.vKp) return GroupKind::Mult;
  return GroupKind::Add;
}

int delta_across(const PrimeContext& ctx, int delta, int m, int e) { return delta + m * (e / ctx.p) * (ctx.p - 1); }

bool ValidationReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const AxiomResult& a) { return a.pass; });
}

const AxiomResult* ValidationReport::find(const std::string& id) const {
  for (const auto& a : entries)
    if (a.id == id) return &a;
  return nullptr;
}

std::vector<std::string> ValidationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& a : entries)
    if (!a.pass) out.push_back(a.id);
  return out;
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& a : entries) {
    os << a.id << (a.pass ? " pass" : " FAIL");
    if (!a.location.empty()) os << " at " << a.location;
    if (!a.message.empty()) os << ": " << a.message;
    os << "\n";
  }
  os << (ok() ? "valid" : "invalid") << "\n";
  return os.str();
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& a : entries)
    axioms.push_back({{"axiom", a.id}, {"status", a.pass ? "pass" : "fail"}, {"location", a.location}, {"message", a.message}});
  return {{"valid", ok()}, {"axioms", axioms}};
}

bool ValidationReport::operator==(const ValidationReport& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto &a = entries[i], &b = o.entries[i];
    if (a.id != b.id || a.pass != b.pass || a.message != b.message || a.location != b.location) return false;
  }
  return true;
}

}  // namespace degp::validate
