#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semint/elem_set.hpp"
#include "semint/errors.hpp"

namespace semint {

class FiniteSemiring;

/// Element of a specific FiniteSemiring instance.
/// An Elem is bound to the semiring object it was created from; combining
/// elements of two distinct instances throws SemiringMismatch even when the
/// instances hold identical tables.
class Elem {
 public:
  Elem(const FiniteSemiring& owner, int index);

  int index() const { return index_; }
  const FiniteSemiring& semiring() const { return *owner_; }

  friend bool operator==(Elem a, Elem b) { return a.owner_ == b.owner_ && a.index_ == b.index_; }
  friend bool operator!=(Elem a, Elem b) { return !(a == b); }

 private:
  const FiniteSemiring* owner_;
  int index_;
};

/// Finite semiring presented by Cayley tables over element indices
/// 0..order-1, with explicit zero and one. Table entry (r, c) encodes r∘c.
///
/// Construction performs the structural checks only (dimensions and index
/// ranges, throwing MalformedTable); whether the tables actually satisfy the
/// axioms is the job of validate_semiring. Instances are immutable.
class FiniteSemiring {
 public:
  FiniteSemiring(int order, std::vector<std::vector<int>> add_table,
                 std::vector<std::vector<int>> mul_table, int zero, int one,
                 std::string name = "");

  int order() const { return order_; }
  int zero() const { return zero_; }
  int one() const { return one_; }
  const std::string& name() const { return name_; }

  int add(int a, int b) const { return add_[index(a, b)]; }
  int mul(int a, int b) const { return mul_[index(a, b)]; }

  Elem elem(int i) const { return Elem(*this, i); }
  Elem zero_elem() const { return elem(zero_); }
  Elem one_elem() const { return elem(one_); }
  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;

  /// Throws SemiringMismatch unless e was created from this instance.
  void require_owned(Elem e) const;

  /// Tables compare equal elementwise (identity of the mathematical object;
  /// element mixing rules still go by instance).
  friend bool operator==(const FiniteSemiring& a, const FiniteSemiring& b);

 private:
  std::size_t index(int a, int b) const;

  int order_, zero_, one_;
  std::vector<int> add_, mul_;  // flattened row-major
  std::string name_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;  // lexicographically first violating tuple
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
};

inline constexpr int kDefaultOrderCap = 256;

/// Exhaustively checks every semiring axiom: commutativity and associativity
/// of +, neutrality of 0 for +, associativity of ·, both distributive laws,
/// annihilation by 0 and neutrality of 1 for ·. Each violated axiom is
/// reported once, with the lexicographically first witness tuple.
/// Throws CapacityExceeded when order > order_cap (the check is O(n^3)).
AxiomReport validate_semiring(const FiniteSemiring& s, int order_cap = kDefaultOrderCap);

/// True iff the multiplication table is symmetric.
bool is_commutative(const FiniteSemiring& s);

/// The unique b with a+b = 0, if any. Uniqueness holds in every validated
/// semiring and is asserted.
std::optional<Elem> additive_inverse(const FiniteSemiring& s, Elem a);

/// The unique two-sided multiplicative inverse, if any.
std::optional<Elem> multiplicative_inverse(const FiniteSemiring& s, Elem a);

/// Smallest b with b·a = 1 / a·b = 1. One-sided inverses need not be unique.
std::optional<Elem> left_inverse(const FiniteSemiring& s, Elem a);
std::optional<Elem> right_inverse(const FiniteSemiring& s, Elem a);

/// Index-level variants used by the law checkers.
std::optional<int> additive_inverse_idx(const FiniteSemiring& s, int a);
std::optional<int> multiplicative_inverse_idx(const FiniteSemiring& s, int a);

/// Left-associated n-fold product a·a·…·a, n >= 1.
Elem power(const FiniteSemiring& s, Elem a, int n);
int power(const FiniteSemiring& s, int a, int n);

/// n-fold sum a+a+…+a, n >= 1.
int repeated_sum(const FiniteSemiring& s, int a, int n);

/// Pairwise set algebra on subsets of the carrier:
/// set_add(A,B) = {a+b}, set_mul(A,B) = {a·b}, set_add_elem(A,c) = {a+c},
/// elem_mul_set(c,A) = {c·a}, set_mul_elem(A,c) = {a·c}.
ElemSet set_add(const FiniteSemiring& s, const ElemSet& a, const ElemSet& b);
ElemSet set_mul(const FiniteSemiring& s, const ElemSet& a, const ElemSet& b);
ElemSet set_add_elem(const FiniteSemiring& s, const ElemSet& a, int c);
ElemSet elem_mul_set(const FiniteSemiring& s, int c, const ElemSet& a);
ElemSet set_mul_elem(const FiniteSemiring& s, const ElemSet& a, int c);

namespace detail {

/// Axiom scan over raw flattened tables. With one == nullopt the unit axioms
/// are skipped (used for the not-necessarily-unitary integral-set semiring).
AxiomReport validate_axiom_tables(int n, const std::vector<int>& add, const std::vector<int>& mul,
                                  int zero, std::optional<int> one);

}  // namespace detail

}  // namespace semint
