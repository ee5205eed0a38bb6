#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "semint/integrals.hpp"

namespace semint {

/// The semiring of 2×2 matrices [[x, y], [0, x]] over a base semiring R,
/// materialized as a plain FiniteSemiring of order |R|² so that the generic
/// machinery (validation, enumeration, law checks, the integral-set
/// semiring) applies unchanged. The pair (x, y) is encoded as x·|R|+y;
/// addition is componentwise, multiplication is
///   (x1, y1)·(x2, y2) = (x1·x2, x1·y2 + y1·x2).
struct MatrixExtension {
  std::shared_ptr<const FiniteSemiring> semiring;
  int base_order;
  int base_zero;

  int encode(int x, int y) const { return x * base_order + y; }
  std::pair<int, int> decode(int i) const { return {i / base_order, i % base_order}; }

  /// The map (x, y) ↦ (0, y), i.e. [[x,y],[0,x]] ↦ [[0,y],[0,0]]; always a
  /// derivation on the extension.
  Derivation canonical_derivation() const;
};

/// Builds the extension. Throws CapacityExceeded when |R|² > order_cap.
MatrixExtension build_matrix_extension(const FiniteSemiring& base,
                                       int order_cap = kDefaultOrderCap);

/// Checks the four set identities that characterize the canonical derivation
/// on the extension:
///   integrables  = {(0, y)},
///   I((0, y))    = {(x, y) : x in R} for every y,
///   constants    = {(x, 0)},
///   integrables ∩ constants = {(0, 0)}.
std::vector<LawReport> verify_extension_identities(const FiniteSemiring& base);

}  // namespace semint
