#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "degp/degdata/model.hpp"
#include "json.hpp"

namespace degp::degdata {

using json = nlohmann::json;

/// Schema violation; what() starts with the JSON path of the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& msg) : std::runtime_error(path + ": " + msg), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Strict object reader: rejects unknown keys and reports typed lookups with their path.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path, std::initializer_list<const char*> required,
               std::initializer_list<const char*> optional = {});

  const json& at(const char* key) const;
  const json* find(const char* key) const;
  std::string sub(const char* key) const { return path_ + "." + key; }
  const std::string& path() const { return path_; }

  int get_int(const char* key) const;
  int get_int_or(const char* key, int fallback) const;
  bool get_bool_or(const char* key, bool fallback) const;
  std::string get_string(const char* key) const;

 private:
  const json& j_;
  std::string path_;
};

int as_int(const json& j, const std::string& path);
std::string index_path(const std::string& path, std::size_t i);

json place_to_json(const Place& z);
/// Accepts "inf", {"minpoly","index"} or {"coord","field_degree"}.
Place place_from_json(const json& j, int p, const std::string& path);

json function_to_json(const arith::RationalFunction& f);
arith::RationalFunction function_from_json(const json& j, int p, const std::string& path);

json torsor_to_json(const VertexTorsor& t);
VertexTorsor torsor_from_json(const json& j, int p, const std::string& path);

json label_to_json(const Label& l);
json boundary_to_json(const BoundaryType& b);
BoundaryType boundary_from_json(const json& j, const std::string& path);
GroupKind kind_from_json(const json& j, const std::string& path);
Species species_from_json(const json& j, const std::string& path);

json to_json(const SimpleDegData& d);
json to_json(const DoubleDegData& d);
json to_json(const GlobalDegData& g);

SimpleDegData simple_from_json(const json& j, const PrimeContext& ctx, const std::string& path = "$");
DoubleDegData double_from_json(const json& j, const PrimeContext& ctx, const std::string& path = "$");
GlobalDegData global_from_json(const json& j, const PrimeContext& ctx, const std::string& path = "$");

}  // namespace degp::degdata
