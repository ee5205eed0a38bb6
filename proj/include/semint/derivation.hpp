#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "semint/semiring.hpp"

namespace semint {

struct DerivationCheck {
  bool ok = true;
  std::string identity;  // "additivity" or "leibniz" when !ok
  int x = -1, y = -1;    // first violating pair, scanning additivity then leibniz
};

/// Checks whether map is a derivation on s: map(x+y) = map(x)+map(y) and
/// map(x·y) = map(x)·y + x·map(y) for all pairs. Structural problems (wrong
/// length, out-of-range value) throw MalformedMap.
DerivationCheck check_derivation(const FiniteSemiring& s, const std::vector<int>& map);

/// A validated derivation on a finite semiring. The constructor replays both
/// defining identities and throws InvalidDerivation (with the first violating
/// pair in the message) if either fails; every live Derivation is valid.
/// map(0) = 0 holds for any valid map and is asserted.
class Derivation {
 public:
  Derivation(std::shared_ptr<const FiniteSemiring> semiring, std::vector<int> map);

  const FiniteSemiring& semiring() const { return *semiring_; }
  const std::shared_ptr<const FiniteSemiring>& semiring_ptr() const { return semiring_; }
  const std::vector<int>& map() const { return map_; }

  int operator()(int x) const { return map_[static_cast<std::size_t>(x)]; }
  Elem operator()(Elem x) const;

  bool is_zero_map() const;

  /// Same semiring instance and same map.
  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.semiring_.get() == b.semiring_.get() && a.map_ == b.map_;
  }
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

 private:
  std::shared_ptr<const FiniteSemiring> semiring_;
  std::vector<int> map_;
};

/// The constant-zero map; a derivation on every semiring.
Derivation zero_derivation(std::shared_ptr<const FiniteSemiring> s);

/// Pointwise sum. Derivations are closed under +, and the zero derivation is
/// neutral, so (Der S, +, d0) is a commutative monoid. Throws
/// SemiringMismatch when the operands live on different instances.
Derivation add_derivations(const Derivation& d1, const Derivation& d2);

inline constexpr int kDefaultEnumerationCap = 12;

/// All derivations on s, each exactly once, sorted lexicographically by map.
/// Uses depth-first search with incremental constraint pruning (brute-force
/// filter for order <= 4). Throws CapacityExceeded when order > cap.
std::vector<Derivation> enumerate_derivations(std::shared_ptr<const FiniteSemiring> s,
                                              int cap = kDefaultEnumerationCap);

/// The n-term expansion of d over a product:
///   d(a1···an) = d(a1)·a2···an + a1·d(a2)·a3···an + ... + a1···a(n-1)·d(an)
/// Equals d applied to the product itself; that identity is asserted.
int derive_product(const Derivation& d, const std::vector<int>& factors);
Elem derive_product(const Derivation& d, std::span<const Elem> factors);

/// d surjective <=> every element is integrable; d injective <=> every
/// integrable element has exactly one integral.
bool is_surjective(const Derivation& d);
bool is_injective(const Derivation& d);

namespace detail {

/// The two enumeration routes, exposed for cross-checking. Both return maps
/// in lexicographic order.
std::vector<std::vector<int>> enumerate_maps_by_filter(const FiniteSemiring& s);
std::vector<std::vector<int>> enumerate_maps_by_dfs(const FiniteSemiring& s);

}  // namespace detail

}  // namespace semint
