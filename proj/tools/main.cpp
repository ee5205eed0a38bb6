#include <optional>
// semint — finite semirings, derivations, and their integral calculus.
//
// Exit codes: 0 ok; 1 validation/law failure; 2 I/O or parse error;
// 3 capacity exceeded; 4 closure condition violated; 5 not integrable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semint/corpus.hpp"
#include "semint/derivation.hpp"
#include "semint/integral_semiring.hpp"
#include "semint/integrals.hpp"
#include "semint/json_io.hpp"
#include "semint/matrix_extension.hpp"
#include "semint/poly.hpp"

using nlohmann::ordered_json;
using namespace semint;

namespace {

int order_cap_from_env() {
  if (const char* v = std::getenv("SEMIRING_CAP")) {
    try {
      return std::max(1, std::stoi(v));
    } catch (const std::exception&) {
      throw ParseError("SEMIRING_CAP is not an integer");
    }
  }
  return kDefaultOrderCap;
}

// A source is a file path or "builtin:NAME".
std::shared_ptr<const FiniteSemiring> load_source(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) {
    auto s = builtin_semiring(source.substr(8));
    if (!s) throw ParseError("unknown builtin \"" + source.substr(8) + "\"");
    return s;
  }
  return std::make_shared<const FiniteSemiring>(load_semiring(source));
}

std::shared_ptr<const FiniteSemiring> load_validated(const std::string& source, int cap) {
  auto s = load_source(source);
  auto report = validate_semiring(*s, cap);
  if (!report.passed) {
    std::cout << axiom_report_json(report).dump(2) << "\n";
    throw Error("semiring axioms violated");  // mapped to exit 1
  }
  return s;
}

// index into the lexicographic enumeration, a comma-separated map, or
// @file with the serialized {"map": [...]}
Derivation resolve_derivation(std::shared_ptr<const FiniteSemiring> s, const std::string& spec,
                              int enum_cap) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw ParseError("cannot open \"" + spec.substr(1) + "\"");
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.contains("map") || !j["map"].is_array()) throw ParseError("missing \"map\" array");
    return Derivation(std::move(s), j["map"].get<std::vector<int>>());
  }
  if (spec.find(',') != std::string::npos) {
    std::vector<int> map;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const auto next = spec.find(',', pos);
      const std::string tok =
          spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      try {
        map.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad map entry \"" + tok + "\"");
      }
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return Derivation(std::move(s), std::move(map));
  }
  int index = 0;
  try {
    index = std::stoi(spec);
  } catch (const std::exception&) {
    throw ParseError("derivation spec must be an index, a comma-separated map, or @file");
  }
  auto all = enumerate_derivations(s, enum_cap);
  if (index < 0 || index >= static_cast<int>(all.size()))
    throw ParseError("derivation index " + std::to_string(index) + " out of range [0, " +
                     std::to_string(all.size()) + ")");
  return all[static_cast<std::size_t>(index)];
}

ordered_json set_json(const ElemSet& set) { return ordered_json(set.elements()); }

std::string set_str(const ElemSet& set) {
  std::string out = "{";
  bool first = true;
  for (int e : set.elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

int run_validate(const std::string& source, bool pretty) {
  auto s = load_source(source);
  auto report = validate_semiring(*s, order_cap_from_env());
  if (pretty) {
    if (report.passed) {
      std::cout << semiring_identity(*s) << ": all axioms hold\n";
    } else {
      for (const auto& v : report.violations) {
        std::cout << "violated " << v.axiom << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          std::cout << (i ? ", " : "") << v.witness[i];
        std::cout << ")\n";
      }
    }
  } else {
    ordered_json j = axiom_report_json(report);
    j["semiring"] = semiring_identity(*s);
    std::cout << j.dump(2) << "\n";
  }
  return report.passed ? 0 : 1;
}

int run_derivations(const std::string& source, int limit, bool pretty) {
  auto s = load_validated(source, order_cap_from_env());
  auto all = enumerate_derivations(s, limit);
  if (pretty) {
    for (std::size_t k = 0; k < all.size(); ++k) {
      std::cout << "d[" << k << "] = [";
      const auto& m = all[k].map();
      for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << m[i];
      std::cout << "]\n";
    }
    std::cout << all.size() << " derivation(s)\n";
  } else {
    ordered_json j;
    j["semiring"] = semiring_identity(*s);
    j["count"] = all.size();
    j["derivations"] = ordered_json::array();
    for (const auto& d : all) j["derivations"].push_back(d.map());
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_integrals(const std::string& source, const std::string& dspec, int limit, bool pretty) {
  auto s = load_validated(source, order_cap_from_env());
  Derivation d = resolve_derivation(s, dspec, limit);
  IntegralTable table(d);
  if (pretty) {
    for (int b = 0; b < s->order(); ++b)
      std::cout << "I(" << b << ") = " << set_str(table.integral_set(b)) << "\n";
    std::cout << "Const = " << set_str(table.constants()) << "\n";
    std::cout << "Int   = " << set_str(table.integrables()) << "\n";
  } else {
    ordered_json j;
    j["semiring"] = semiring_identity(*s);
    j["derivation"] = d.map();
    j["integral_sets"] = ordered_json::array();
    for (int b = 0; b < s->order(); ++b)
      j["integral_sets"].push_back(set_json(table.integral_set(b)));
    j["constants"] = set_json(table.constants());
    j["integrables"] = set_json(table.integrables());
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_integral_semiring(const std::string& source, const std::string& dspec, int limit,
                          bool pretty) {
  auto s = load_validated(source, order_cap_from_env());
  Derivation d = resolve_derivation(s, dspec, limit);
  auto closure = check_closure_condition(d);
  if (!closure.holds) {
    if (pretty) {
      std::cout << "closure condition fails: witness (" << closure.witness->first << ", "
                << closure.witness->second << ")\n";
    } else {
      ordered_json j;
      j["semiring"] = semiring_identity(*s);
      j["derivation"] = d.map();
      j["closure"] = {{"holds", false},
                      {"witness", {closure.witness->first, closure.witness->second}}};
      std::cout << j.dump(2) << "\n";
    }
    return 4;
  }
  IntegralFamily fam = build_integral_semiring(d);
  AxiomReport axioms = validate_nonunitary_semiring(fam);
  const int m = fam.member_count();
  if (pretty) {
    std::cout << "members:";
    for (int i = 0; i < m; ++i) std::cout << " " << fam.label_string(i);
    std::cout << "\n";
    auto print_table = [&](const char* title, auto op) {
      std::cout << title << "\n";
      for (int i = 0; i < m; ++i) {
        std::cout << " ";
        for (int j = 0; j < m; ++j) std::cout << " " << fam.label_string(op(i, j));
        std::cout << "\n";
      }
    };
    print_table("(+) table:", [&](int i, int j) { return fam.add(i, j); });
    print_table("(*) table:", [&](int i, int j) { return fam.mul(i, j); });
    std::cout << (axioms.passed ? "axioms hold (not necessarily unitary)\n" : "AXIOM FAILURE\n");
  } else {
    ordered_json j;
    j["semiring"] = semiring_identity(*s);
    j["derivation"] = d.map();
    j["closure"] = {{"holds", true}};
    j["members"] = ordered_json::array();
    for (int i = 0; i < m; ++i) j["members"].push_back(fam.label_string(i));
    auto table_json = [&](auto op) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < m; ++i) {
        ordered_json row = ordered_json::array();
        for (int jj = 0; jj < m; ++jj) row.push_back(op(i, jj));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    j["add"] = table_json([&](int i, int jj) { return fam.add(i, jj); });
    j["mul"] = table_json([&](int i, int jj) { return fam.mul(i, jj); });
    j["axioms"] = axiom_report_json(axioms);
    std::cout << j.dump(2) << "\n";
  }
  return axioms.passed ? 0 : 1;
}

int run_matrix(const std::string& source) {
  auto base = load_validated(source, order_cap_from_env());
  auto ext = build_matrix_extension(*base, order_cap_from_env());
  std::cout << save_semiring(*ext.semiring);
  return 0;
}

int run_builtin(const std::string& name) {
  auto s = builtin_semiring(name);
  if (!s) throw ParseError("unknown builtin \"" + name + "\"");
  std::cout << save_semiring(*s);
  return 0;
}

int run_poly_diff(std::uint32_t characteristic, const std::string& text, bool pretty) {
  Polynomial p = Polynomial::parse(characteristic, text);
  Polynomial dp = poly_derivative(p);
  if (pretty) {
    std::cout << dp.pretty() << "\n";
  } else {
    ordered_json j;
    j["characteristic"] = characteristic;
    j["input"] = p.str();
    j["derivative"] = dp.str();
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_poly_int(std::uint32_t characteristic, const std::string& text, unsigned bound,
                 bool pretty) {
  Polynomial p = Polynomial::parse(characteristic, text);
  std::optional<IntegralDescription> desc;
  try {
    desc = poly_integrate(p, bound);
  } catch (const NotIntegrable& e) {
    if (pretty) {
      std::cout << "not integrable: " << e.what() << "\n";
    } else {
      ordered_json j;
      j["error"] = "not-integrable";
      j["index"] = e.index();
      std::cout << j.dump(2) << "\n";
    }
    return 5;
  }
  if (pretty) {
    std::cout << desc->particular.pretty() << " + C,  C in " << desc->constant_space.describe()
              << "\n";
  } else {
    ordered_json j;
    j["characteristic"] = characteristic;
    j["input"] = p.str();
    j["particular"] = desc->particular.str();
    j["constant_space"] = desc->constant_space.describe();
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int run_poly_closure(std::uint32_t characteristic, unsigned bound, bool pretty) {
  auto result = closure_condition(characteristic, bound);
  if (pretty) {
    if (result.holds) {
      std::cout << "holds up to degree " << bound << "\n";
    } else {
      std::cout << "fails: witness " << result.witness->first.pretty() << " * "
                << result.witness->second.pretty() << " = "
                << (result.witness->first * result.witness->second).pretty() << "\n";
    }
  } else {
    ordered_json j;
    j["characteristic"] = characteristic;
    j["degree_bound"] = bound;
    j["holds"] = result.holds;
    if (!result.holds)
      j["witness"] = {{"left", result.witness->first.str()},
                      {"right", result.witness->second.str()},
                      {"product", (result.witness->first * result.witness->second).str()}};
    std::cout << j.dump(2) << "\n";
  }
  return result.holds ? 0 : 1;
}

int run_corpus(bool all, bool pretty) {
  const auto& names = law_names();
  std::vector<long long> nonvacuous(names.size(), 0);
  bool all_passed = true;
  ordered_json pairs = ordered_json::array();

  for (const auto& entry : builtin_corpus()) {
    auto derivations = enumerate_derivations(entry.semiring);
    if (static_cast<int>(derivations.size()) != entry.derivation_count) {
      std::cerr << "census drift on " << entry.name << ": expected " << entry.derivation_count
                << " derivations, got " << derivations.size() << "\n";
      all_passed = false;
    }
    for (const auto& d : derivations) {
      auto reports = check_all_laws(d);
      ordered_json laws = ordered_json::array();
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        if (!rep.passed) all_passed = false;
        if (!rep.vacuous) ++nonvacuous[i];
        laws.push_back(law_report_json(rep));
        if (pretty && (!rep.passed || all))
          std::cout << entry.name << " map=" << ordered_json(d.map()).dump() << " " << rep.law
                    << ": " << (rep.passed ? (rep.vacuous ? "vacuous" : "pass") : "FAIL") << "\n";
      }
      if (all) {
        ordered_json pj;
        pj["semiring"] = entry.name;
        pj["derivation"] = d.map();
        pj["laws"] = std::move(laws);
        pairs.push_back(std::move(pj));
      }
    }
  }

  ordered_json missing = ordered_json::array();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (nonvacuous[i] == 0) missing.push_back(names[i]);
  const bool covered = missing.empty();

  if (pretty) {
    std::cout << (all_passed ? "all laws hold" : "LAW FAILURES") << "; "
              << (covered ? "every law non-vacuous somewhere" : "uncovered laws present") << "\n";
  } else {
    ordered_json j;
    if (all) j["pairs"] = std::move(pairs);
    j["summary"] = {{"all_passed", all_passed},
                    {"laws", names.size()},
                    {"uncovered_laws", std::move(missing)}};
    std::cout << j.dump(2) << "\n";
  }
  return all_passed && covered ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derivations and integration on finite and polynomial semirings"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string source, dspec = "0", name, polytext;
  int limit = kDefaultEnumerationCap;
  unsigned characteristic = 0, bound = kDefaultDegreeBound;

  auto* validate = app.add_subcommand("validate", "check the semiring axioms of a table file");
  validate->add_option("source", source, "file path or builtin:NAME")->required();

  auto* derivations = app.add_subcommand("derivations", "enumerate all derivations");
  derivations->add_option("source", source)->required();
  derivations->add_option("--limit", limit, "enumeration order cap (default 12)");

  auto* integrals = app.add_subcommand("integrals", "print integral sets, constants, integrables");
  integrals->add_option("source", source)->required();
  integrals->add_option("--derivation", dspec, "index, comma-separated map, or @file");
  integrals->add_option("--limit", limit);

  auto* family = app.add_subcommand("integral-semiring",
                                    "build the semiring of integral sets (refused when the "
                                    "integrables are not multiplicatively closed)");
  family->add_option("source", source)->required();
  family->add_option("--derivation", dspec, "index, comma-separated map, or @file");
  family->add_option("--limit", limit);

  auto* matrix = app.add_subcommand("matrix", "emit the 2x2 triangular matrix extension");
  matrix->add_option("source", source, "base semiring")->required();

  auto* builtin = app.add_subcommand("builtin", "emit a built-in semiring as JSON");
  builtin->add_option("name", name)->required();

  auto* corpus =
      app.add_subcommand("corpus", "run every law check over the whole built-in corpus");
  bool corpus_all = false;
  corpus->add_flag("--all", corpus_all, "include the full per-pair law matrix in the output");

  auto* poly = app.add_subcommand("poly", "polynomial semiring over Q or GF(p)");
  poly->require_subcommand(1);
  auto* pdiff = poly->add_subcommand("diff", "formal derivative");
  pdiff->add_option("--char", characteristic, "field characteristic: 0 or a prime")->required();
  pdiff->add_option("polynomial", polytext, "coefficients, low degree first, e.g. \"0 1\"")
      ->required();
  auto* pint = poly->add_subcommand("int", "antiderivatives");
  pint->add_option("--char", characteristic, "field characteristic: 0 or a prime")->required();
  pint->add_option("polynomial", polytext, "coefficients, low degree first")->required();
  pint->add_option("--bound", bound, "constant-space degree bound (default 8)");
  auto* pclosure =
      poly->add_subcommand("closure", "is the product of integrables integrable?");
  pclosure->add_option("--char", characteristic, "field characteristic: 0 or a prime")
      ->required();
  pclosure->add_option("--bound", bound, "monomial degree bound (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return run_validate(source, pretty);
    if (*derivations) return run_derivations(source, limit, pretty);
    if (*integrals) return run_integrals(source, dspec, limit, pretty);
    if (*family) return run_integral_semiring(source, dspec, limit, pretty);
    if (*matrix) return run_matrix(source);
    if (*builtin) return run_builtin(name);
    if (*corpus) return run_corpus(corpus_all, pretty);
    if (*pdiff) return run_poly_diff(characteristic, polytext, pretty);
    if (*pint) return run_poly_int(characteristic, polytext, bound, pretty);
    if (*pclosure) return run_poly_closure(characteristic, bound, pretty);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedTable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedMap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BoundTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapacityExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ClosureViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NotIntegrable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const InvalidDerivation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
