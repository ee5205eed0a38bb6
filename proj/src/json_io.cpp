#include "semint/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace semint {

using nlohmann::ordered_json;

static std::vector<std::vector<int>> parse_table(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(std::string("missing or non-array \"") + key + "\"");
  std::vector<std::vector<int>> table;
  for (const auto& row : j[key]) {
    if (!row.is_array()) throw ParseError(std::string("\"") + key + "\": row is not an array");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\": non-integer entry");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  return table;
}

FiniteSemiring parse_semiring(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level is not an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "order" && key != "zero" && key != "one" && key != "add" &&
        key != "mul")
      throw ParseError("unknown key \"" + key + "\"");
  }
  for (const char* key : {"order", "zero", "one"})
    if (!j.contains(key) || !j[key].is_number_integer())
      throw ParseError(std::string("missing or non-integer \"") + key + "\"");
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" is not a string");
    name = j["name"].get<std::string>();
  }
  return FiniteSemiring(j["order"].get<int>(), parse_table(j, "add"), parse_table(j, "mul"),
                        j["zero"].get<int>(), j["one"].get<int>(), std::move(name));
}

FiniteSemiring load_semiring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semiring(buf.str());
}

ordered_json semiring_json(const FiniteSemiring& s) {
  ordered_json j;
  if (!s.name().empty()) j["name"] = s.name();
  j["order"] = s.order();
  j["zero"] = s.zero();
  j["one"] = s.one();
  auto dump_table = [&](auto op) {
    ordered_json rows = ordered_json::array();
    for (int a = 0; a < s.order(); ++a) {
      ordered_json row = ordered_json::array();
      for (int b = 0; b < s.order(); ++b) row.push_back(op(a, b));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["add"] = dump_table([&](int a, int b) { return s.add(a, b); });
  j["mul"] = dump_table([&](int a, int b) { return s.mul(a, b); });
  return j;
}

std::string save_semiring(const FiniteSemiring& s) { return semiring_json(s).dump(2) + "\n"; }

std::string semiring_identity(const FiniteSemiring& s) {
  if (!s.name().empty()) return s.name();
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= 1099511628211ull;
  };
  mix(s.order());
  mix(s.zero());
  mix(s.one());
  for (int a = 0; a < s.order(); ++a)
    for (int b = 0; b < s.order(); ++b) {
      mix(s.add(a, b));
      mix(s.mul(a, b));
    }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

ordered_json derivation_json(const Derivation& d) {
  ordered_json j;
  j["semiring"] = semiring_identity(d.semiring());
  j["map"] = d.map();
  return j;
}

ordered_json axiom_report_json(const AxiomReport& report) {
  ordered_json j;
  j["passed"] = report.passed;
  j["violations"] = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json item;
    item["axiom"] = v.axiom;
    item["witness"] = v.witness;
    j["violations"].push_back(std::move(item));
  }
  return j;
}

ordered_json law_report_json(const LawReport& report) {
  ordered_json j;
  j["law"] = report.law;
  j["statement"] = report.statement;
  j["passed"] = report.passed;
  j["vacuous"] = report.vacuous;
  j["qualifying_count"] = report.qualifying;
  if (report.witness) j["witness"] = *report.witness;
  return j;
}

}  // namespace semint
