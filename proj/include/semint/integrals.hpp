#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semint/derivation.hpp"

namespace semint {

/// All integral sets of one derivation, computed in one pass:
/// integral_set(b) = {a : d(a) = b}, constants = integral_set(0),
/// integrables = {b : integral_set(b) nonempty}.
/// The integral sets partition the carrier.
class IntegralTable {
 public:
  explicit IntegralTable(const Derivation& d);

  const Derivation& derivation() const { return d_; }
  const ElemSet& integral_set(int b) const { return sets_[static_cast<std::size_t>(b)]; }
  const ElemSet& constants() const { return sets_[static_cast<std::size_t>(zero_)]; }
  const ElemSet& integrables() const { return integrables_; }

 private:
  Derivation d_;
  int zero_;
  std::vector<ElemSet> sets_;
  ElemSet integrables_;
};

ElemSet integral_set(const Derivation& d, Elem b);
ElemSet constants(const Derivation& d);
ElemSet integrables(const Derivation& d);

/// Outcome of checking one integration law over all tuples that satisfy its
/// hypothesis. qualifying counts those tuples; a law with zero qualifying
/// tuples passes vacuously and is flagged, so suites can require non-vacuous
/// coverage. A failed law carries the lexicographically first witness.
struct LawReport {
  LawReport() = default;
  LawReport(std::string law_name, std::string law_statement)
      : law(std::move(law_name)), statement(std::move(law_statement)) {}

  std::string law;        // stable kebab-case identifier
  std::string statement;  // the identity being checked, human-readable
  bool passed = true;
  bool vacuous = false;
  long long qualifying = 0;
  std::optional<std::string> witness;
};

/// Elementary laws: integrals add, products of integrals integrate the
/// Leibniz combination, 0 is a constant, an integral of 1 forces
/// idempotence, d maps I(a) onto {a}, inverses of constants are constants.
std::vector<LawReport> check_basic_laws(const Derivation& d);

/// Adding or multiplying by a constant stays inside integral sets:
/// I(a)+c ⊆ I(a), c·I(a) ⊆ I(c·a), I(a)·c ⊆ I(a·c).
std::vector<LawReport> check_constant_shift_laws(const Derivation& d);

/// For invertible e: a ∈ I(e·d(b)) ⇔ b ∈ I(e⁻¹·d(a)) and the mirrored form,
/// plus the consequence c⁻¹ ∈ I(c⁻¹·d(1)) ∩ I(d(1)·c⁻¹) for invertible
/// constants c.
std::vector<LawReport> check_exchange_laws(const Derivation& d);

/// Converse inclusions available when the shifting/scaling element is
/// (additively) invertible with its inverse a constant.
std::vector<LawReport> check_converse_inclusion_laws(const Derivation& d);

/// The resulting equalities I(a)+c = I(a), I(c·a) = c·I(a), I(a·c) = I(a)·c.
std::vector<LawReport> check_shift_scale_equalities(const Derivation& d);

/// Rules for constants with a one-sided multiplicative inverse.
std::vector<LawReport> check_one_sided_unit_laws(const Derivation& d);

/// Every a with d(d(a)) = d(a) and d(a) additively invertible splits as
/// constant + integrable; the witness split e = a+(−d(a)), b = d(a) is
/// replayed.
LawReport check_decomposition_law(const Derivation& d);

/// e ∈ I(a), f ∈ I(e·d(b)), f additively invertible ⇒ e·b+(−f) ∈ I(a·b),
/// checked over all qualifying tuples.
LawReport check_by_parts_law(const Derivation& d);

/// When some integral of a is additively invertible, I(a+b) = I(a)+I(b).
/// Both directions are replayed: membership of each pairwise sum, and the
/// decomposition f = e+((−e)+f) of each integral of a+b.
LawReport check_sum_law(const Derivation& d);

/// All of the above, in a fixed order matching law_names().
std::vector<LawReport> check_all_laws(const Derivation& d);

/// The fixed list of law identifiers, for coverage accounting.
const std::vector<std::string>& law_names();

/// The constructive by-parts rule: given e ∈ I(a), f ∈ I(e·d(b)) with f
/// additively invertible, returns g = e·b+(−f) and asserts d(g) = a·b.
/// Throws HypothesisUnmet naming the first precondition that fails.
Elem integrate_by_parts(const Derivation& d, Elem a, Elem b, Elem e, Elem f);

}  // namespace semint
