#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semint/integrals.hpp"

namespace semint {

struct ClosureCheck {
  bool holds = true;
  // lexicographically first integrable pair whose product is not integrable
  std::optional<std::pair<int, int>> witness;
};

/// Whether the integrable elements are closed under multiplication. This is
/// the condition that makes the integral-set semiring constructible.
ClosureCheck check_closure_condition(const Derivation& d);

/// The family {∅} ∪ {I(x) : x integrable} with
///   [x] ⊕ [y] = [x+y],  z ⊕ ∅ = z,  [x] ⊙ [y] = [x·y],  z ⊙ ∅ = ∅.
/// Member 0 is ∅; members 1.. are the nonempty integral sets in increasing
/// order of their defining integrable element (distinct integrable elements
/// have distinct, disjoint integral sets, so the labeling is canonical).
/// A (not necessarily unitary) semiring with ∅ as its zero.
class IntegralFamily {
 public:
  static constexpr int kEmptyMember = 0;

  int member_count() const { return static_cast<int>(labels_.size()) + 1; }
  const Derivation& derivation() const { return d_; }

  /// Defining integrable element of member m >= 1.
  int label_of(int m) const;
  /// Underlying integral set of member m >= 1.
  const ElemSet& member_set(int m) const;
  /// Member holding I(x), or nullopt when x is not integrable.
  std::optional<int> member_of(int x) const;

  int add(int m1, int m2) const { return add_[index(m1, m2)]; }
  int mul(int m1, int m2) const { return mul_[index(m1, m2)]; }

  /// "empty" for member 0, "[x]" otherwise.
  std::string label_string(int m) const;

 private:
  friend IntegralFamily build_integral_semiring(const Derivation& d);
  explicit IntegralFamily(const Derivation& d);
  std::size_t index(int m1, int m2) const;

  Derivation d_;
  IntegralTable table_;
  std::vector<int> labels_;         // member m>=1 -> integrable element
  std::vector<int> member_of_;      // element -> member, -1 if not integrable
  std::vector<int> add_, mul_;      // member_count × member_count, row-major
};

/// Builds the family. Refuses with ClosureViolated when the integrables are
/// not multiplicatively closed (⊙ would not land in the family).
IntegralFamily build_integral_semiring(const Derivation& d);

/// Exhaustively checks the semiring axioms minus the multiplicative unit on
/// the family's tables: ⊕ commutative/associative/∅-neutral, ⊙ associative,
/// ∅ absorbing, both distributive laws.
AxiomReport validate_nonunitary_semiring(const IntegralFamily& fam);

}  // namespace semint
