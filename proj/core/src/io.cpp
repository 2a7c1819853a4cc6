#include "toricfrob/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace toricfrob {

namespace {

using json = nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Integer to_integer(const json& v, const std::string& field) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : Integer(std::to_string(v.get<std::int64_t>()));
  }
  // Large entries may be given as decimal strings.
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  field_error(field, "expected an integer");
}

}  // namespace

Fan parse_fan(const std::string& text, std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "line 1: expected a JSON object");

  if (!doc.contains("dim")) field_error("dim", "missing");
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::uint64_t>() == 0)
    field_error("dim", "expected a positive integer");
  const std::size_t dim = doc["dim"].get<std::size_t>();

  if (!doc.contains("rays") || !doc["rays"].is_array()) field_error("rays", "expected an array");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < doc["rays"].size(); ++i) {
    const auto& row = doc["rays"][i];
    const std::string field = "rays[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != dim)
      field_error(field, "expected " + std::to_string(dim) + " integers");
    IntVector v;
    for (std::size_t j = 0; j < dim; ++j) v.push_back(to_integer(row[j], field));
    if (is_zero(v)) field_error(field, "zero ray");
    rays.push_back(std::move(v));
  }

  if (!doc.contains("max_cones") || !doc["max_cones"].is_array())
    field_error("max_cones", "expected an array");
  std::vector<IndexSet> cones;
  for (std::size_t i = 0; i < doc["max_cones"].size(); ++i) {
    const auto& row = doc["max_cones"][i];
    const std::string field = "max_cones[" + std::to_string(i) + "]";
    if (!row.is_array() || row.empty()) field_error(field, "expected a nonempty index array");
    IndexSet cone;
    for (const auto& idx : row) {
      if (!idx.is_number_unsigned()) field_error(field, "expected nonnegative indices");
      const auto k = idx.get<std::uint64_t>();
      if (k >= rays.size()) field_error(field, "index " + std::to_string(k) + " out of range");
      cone.push_back(static_cast<std::size_t>(k));
    }
    cones.push_back(std::move(cone));
  }

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) field_error("name", "expected a string");
    name = doc["name"].get<std::string>();
  }

  Fan fan = make_fan(dim, std::move(rays), std::move(cones), std::move(name), warnings);
  require_valid(fan);
  return fan;
}

Fan read_fan_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fan(buf.str(), warnings);
}

std::string serialize_fan(const Fan& fan) {
  nlohmann::ordered_json doc;
  doc["dim"] = fan.dim;
  auto rays = nlohmann::ordered_json::array();
  for (const auto& r : fan.rays) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& x : r) {
      if (x.fits_slong_p())
        row.push_back(x.get_si());
      else
        row.push_back(x.get_str());
    }
    rays.push_back(std::move(row));
  }
  doc["rays"] = std::move(rays);
  doc["max_cones"] = fan.max_cones;
  if (!fan.name.empty()) doc["name"] = fan.name;
  return doc.dump(2) + "\n";
}

}  // namespace toricfrob
