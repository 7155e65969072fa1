#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "akh/error.hpp"
#include "akh/lie_model.hpp"

namespace akh {

namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k)
    if (text[k] == '\n') ++line;
  return line;
}

mpq_class rational_field(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return mpq_class(value.get<long>());
  throw InputError(where + ": expected a rational string such as \"-1/2\"");
}

std::size_t index_field(const json& entry, const char* key, std::size_t dim, const std::string& where) {
  if (!entry.contains(key) || !entry[key].is_number_integer())
    throw InputError(where + "." + key + ": expected an integer frame index");
  const long v = entry[key].get<long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim)
    throw InputError(where + "." + key + ": index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

LieModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of(text, e.byte)) + ": invalid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw InputError("top level: expected a JSON object");
  if (!doc.contains("format") || doc["format"] != 1) throw InputError("format: expected 1");
  if (!doc.contains("name") || !doc["name"].is_string()) throw InputError("name: expected a string");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() <= 0)
    throw InputError("dim: expected a positive integer");
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long>());
  if (dim % 2 != 0) throw InputError("dim: must be even, got " + std::to_string(dim));

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, mpq_class> explicit_entries;
  const json brackets = doc.value("brackets", json::array());
  if (!brackets.is_array()) throw InputError("brackets: expected an array");
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const std::string where = "brackets[" + std::to_string(n) + "]";
    const json& e = brackets[n];
    if (!e.is_object()) throw InputError(where + ": expected an object {i, j, k, c}");
    const std::size_t i = index_field(e, "i", dim, where);
    const std::size_t j = index_field(e, "j", dim, where);
    const std::size_t k = index_field(e, "k", dim, where);
    if (!e.contains("c")) throw InputError(where + ".c: missing");
    const mpq_class c = rational_field(e["c"], where + ".c");
    if (i == j && sgn(c) != 0) throw InputError(where + ": [X_i, X_i] must vanish");
    if (!explicit_entries.emplace(std::make_tuple(i, j, k), c).second)
      throw InputError(where + ": duplicate entry for [X_" + std::to_string(i + 1) + ", X_" + std::to_string(j + 1) +
                       "] component " + std::to_string(k + 1));
  }

  std::vector<BracketEntry> entries;
  for (const auto& [key, c] : explicit_entries) {
    const auto [i, j, k] = key;
    if (i == j) continue;
    const auto mirror = explicit_entries.find(std::make_tuple(j, i, k));
    if (mirror != explicit_entries.end()) {
      if (mirror->second != -c)
        throw InputError("brackets: [X_" + std::to_string(i + 1) + ", X_" + std::to_string(j + 1) +
                         "] and its reverse violate antisymmetry");
      if (i > j) continue;
    }
    if (i < j) entries.push_back({i, j, k, c});
    else entries.push_back({j, i, k, -c});
  }

  if (!doc.contains("J") || !doc["J"].is_array() || doc["J"].size() != dim)
    throw InputError("J: expected " + std::to_string(dim) + " rows");
  ExactMatrix J(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = doc["J"][r];
    if (!row.is_array() || row.size() != dim)
      throw InputError("J[" + std::to_string(r) + "]: expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c)
      J(r, c) = GaussScalar(rational_field(row[c], "J[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
  }
  return LieModel(doc["name"].get<std::string>(), dim, entries, std::move(J));
}

LieModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_model(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_model(const LieModel& model) {
  json doc;
  doc["format"] = 1;
  doc["name"] = model.name();
  doc["dim"] = model.dim();
  json brackets = json::array();
  for (const auto& b : model.brackets())
    brackets.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"k", b.k + 1}, {"c", rational_to_string(b.c)}});
  doc["brackets"] = brackets;
  json J = json::array();
  for (std::size_t r = 0; r < model.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < model.dim(); ++c) row.push_back(rational_to_string(model.J()(r, c).re()));
    J.push_back(row);
  }
  doc["J"] = J;
  return doc.dump(2) + "\n";
}

}  // namespace akh
