#pragma once

#include <string>

#include <json.hpp>

#include "semint/derivation.hpp"
#include "semint/integrals.hpp"
#include "semint/semiring.hpp"

namespace semint {

/// Semiring file schema (all fields required except name):
///   {"name": str?, "order": n, "zero": i, "one": j,
///    "add": [[n ints] × n], "mul": [[n ints] × n]}
/// Row r, column c encodes r∘c. Unknown keys are rejected so that
/// load → save is the identity up to whitespace.
FiniteSemiring parse_semiring(const std::string& json_text);
FiniteSemiring load_semiring(const std::string& path);

/// Canonical serialization: fixed key order, name omitted when empty.
nlohmann::ordered_json semiring_json(const FiniteSemiring& s);
std::string save_semiring(const FiniteSemiring& s);

/// The semiring's name, or a 64-bit FNV-1a hash of its tables when unnamed.
std::string semiring_identity(const FiniteSemiring& s);

/// {"semiring": name-or-hash, "map": [i0, ..., i(n-1)]}
nlohmann::ordered_json derivation_json(const Derivation& d);

nlohmann::ordered_json axiom_report_json(const AxiomReport& report);
/// {"law", "statement", "passed", "vacuous", "qualifying_count", "witness"?}
nlohmann::ordered_json law_report_json(const LawReport& report);

}  // namespace semint
