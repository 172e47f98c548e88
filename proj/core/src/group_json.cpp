#include "qga/group_json.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qga {

using nlohmann::json;

Group parse_group_json(const std::string& text, const ParseOptions& opts) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format") || !doc["format"].is_string())
    throw std::invalid_argument("group file needs a string \"format\" field");
  std::string format = doc["format"].get<std::string>();

  if (format == "cayley") {
    if (!doc.contains("order") || !doc["order"].is_number_integer())
      throw std::invalid_argument("cayley format needs an integer \"order\"");
    long order = doc["order"].get<long>();
    if (order < 1) throw std::invalid_argument("group order must be positive");
    if (order > opts.cap) throw std::invalid_argument("group order exceeds the cap");
    if (!doc.contains("table") || !doc["table"].is_array() ||
        static_cast<long>(doc["table"].size()) != order)
      throw std::invalid_argument("cayley format needs an order x order \"table\"");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(order) * order);
    for (const auto& row : doc["table"]) {
      if (!row.is_array() || static_cast<long>(row.size()) != order)
        throw std::invalid_argument("cayley table rows must have length equal to the order");
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw std::invalid_argument("cayley table entries must be integers");
        long x = v.get<long>();
        if (x < 0 || x >= order) throw std::invalid_argument("cayley table entry out of range");
        flat.push_back(static_cast<int>(x));
      }
    }
    return Group::from_table(std::move(flat), opts.verify);
  }

  if (format == "perm") {
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
      throw std::invalid_argument("perm format needs an integer \"degree\"");
    int degree = doc["degree"].get<int>();
    if (!doc.contains("generators") || !doc["generators"].is_array())
      throw std::invalid_argument("perm format needs a \"generators\" array");
    std::vector<std::vector<int>> gens;
    for (const auto& p : doc["generators"]) {
      if (!p.is_array()) throw std::invalid_argument("each generator must be an array");
      std::vector<int> perm;
      for (const auto& v : p) {
        if (!v.is_number_integer()) throw std::invalid_argument("permutation entries must be integers");
        perm.push_back(v.get<int>());
      }
      gens.push_back(std::move(perm));
    }
    return close_generators(degree, gens, opts.cap, opts.verify);
  }

  throw std::invalid_argument("unknown group file format: " + format);
}

Group load_group_file(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_json(ss.str(), opts);
}

std::string serialize_group(const Group& g) {
  json doc;
  doc["format"] = "cayley";
  doc["order"] = g.order();
  json table = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  doc["table"] = std::move(table);
  return doc.dump();
}

} // namespace qga
