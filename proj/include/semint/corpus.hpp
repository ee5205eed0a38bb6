#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "semint/semiring.hpp"

namespace semint {

/// A built-in semiring plus its frozen regression anchors. The anchors were
/// recorded from an enumeration run and pinned; a change in any of them is a
/// regression.
struct CorpusEntry {
  std::string name;
  std::shared_ptr<const FiniteSemiring> semiring;
  int derivation_count;
  // per derivation, in lexicographic map order: (|constants|, |integrables|)
  std::vector<std::pair<int, int>> const_int_sizes;
};

/// The law-check corpus: semirings chosen so every law has a non-vacuous
/// instance somewhere (rings contribute additive inverses, chains contribute
/// idempotence, the triangular extensions contribute partial integrability).
const std::vector<CorpusEntry>& builtin_corpus();

/// Corpus entries plus extra named fixtures (e.g. the order-27 truncated
/// polynomial semiring GF3[x]/(x^3), whose derivative map violates the
/// multiplicative closure of integrables). Returns nullptr for unknown names.
std::shared_ptr<const FiniteSemiring> builtin_semiring(const std::string& name);

std::vector<std::string> builtin_names();

/// Individual constructors.
std::shared_ptr<const FiniteSemiring> make_trivial();
std::shared_ptr<const FiniteSemiring> make_bool2();            // ({0,1}, or, and)
std::shared_ptr<const FiniteSemiring> make_mod_ring(int m);    // Z/m
std::shared_ptr<const FiniteSemiring> make_chain(int n);       // ({0..n-1}, max, min)
std::shared_ptr<const FiniteSemiring> make_truncated_gf3();    // GF(3)[x]/(x^3)

/// The formal derivative on make_truncated_gf3(); a derivation whose
/// integrables are not closed under multiplication.
std::vector<int> truncated_gf3_derivative_map();

}  // namespace semint
