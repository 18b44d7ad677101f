#include "ordmatch/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordmatch/errors.hpp"

namespace ordmatch {

using nlohmann::ordered_json;

Instance parse_instance(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("instance document: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance document: not an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ValidationError("instance document: missing integer field 'n'");
  const int n = doc["n"].get<int>();
  if (n < 1) throw ValidationError("instance document: n must be >= 1");
  if (!doc.contains("weights") || !doc["weights"].is_array())
    throw ValidationError("instance document: missing array field 'weights'");
  const auto& rows = doc["weights"];
  if (static_cast<int>(rows.size()) != n)
    throw ValidationError("instance document: weights must have n rows");
  std::vector<double> w;
  w.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ValidationError("instance document: each row must have n entries");
    for (const auto& cell : row) {
      if (!cell.is_number())
        throw ValidationError("instance document: weights must be numbers");
      w.push_back(cell.get<double>());
    }
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      throw ValidationError("instance document: name must be a string");
    name = doc["name"].get<std::string>();
  }
  return Instance::make(n, std::move(w), std::move(name));
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string instance_to_json(const Instance& inst) {
  ordered_json doc;
  doc["n"] = inst.n;
  auto rows = ordered_json::array();
  for (int i = 0; i < inst.n; ++i) {
    auto row = ordered_json::array();
    for (int j = 0; j < inst.n; ++j) row.push_back(inst.at(i, j));
    rows.push_back(std::move(row));
  }
  doc["weights"] = std::move(rows);
  if (!inst.name.empty()) doc["name"] = inst.name;
  return doc.dump(2) + "\n";
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write instance file: " + path);
  out << instance_to_json(inst);
}

std::string matching_to_json(const Instance& inst, const Matching& m) {
  ordered_json doc;
  auto pairs = ordered_json::array();
  for (auto [x, y] : m.pairs) pairs.push_back(ordered_json::array({x, y}));
  doc["pairs"] = std::move(pairs);
  doc["weight"] = matching_weight(inst, m);
  return doc.dump(2) + "\n";
}

Matching parse_matching(const std::string& json_text, const Instance& inst) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("matching document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
    throw ValidationError("matching document: missing array field 'pairs'");
  Matching m;
  m.n = inst.n;
  for (const auto& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw ValidationError("matching document: pairs must be [x, y] integers");
    m.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  const double w = matching_weight(inst, m);  // validates shape
  if (doc.contains("weight")) {
    if (!doc["weight"].is_number())
      throw ValidationError("matching document: weight must be a number");
    const double claimed = doc["weight"].get<double>();
    if (std::abs(claimed - w) > 1e-9 * std::max(1.0, std::abs(w)))
      throw ValidationError("matching document: stored weight disagrees with instance");
  }
  return m;
}

}  // namespace ordmatch
