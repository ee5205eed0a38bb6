#include <doctest.h>

#include "semint/corpus.hpp"
#include "semint/derivation.hpp"
#include "semint/integrals.hpp"

using namespace semint;

namespace {

// Test-local oracle: try every one of the n^n maps through check_derivation.
std::vector<std::vector<int>> oracle_all_derivations(const FiniteSemiring& s) {
  const int n = s.order();
  std::vector<std::vector<int>> out;
  std::vector<int> map(n, 0);
  while (true) {
    if (check_derivation(s, map).ok) out.push_back(map);
    int k = n - 1;
    while (k >= 0 && map[k] == n - 1) map[k--] = 0;
    if (k < 0) break;
    ++map[k];
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration matches the brute-force oracle and the frozen census") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.name);
    auto expected = oracle_all_derivations(*entry.semiring);
    auto actual = enumerate_derivations(entry.semiring);
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i) CHECK(actual[i].map() == expected[i]);
    // frozen regression anchors
    CHECK(static_cast<int>(actual.size()) == entry.derivation_count);
  }
}

TEST_CASE("frozen census: B2 has 2, Z2 has 1, C3 has 3 derivations") {
  CHECK(enumerate_derivations(make_bool2()).size() == 2);
  CHECK(enumerate_derivations(make_mod_ring(2)).size() == 1);
  CHECK(enumerate_derivations(make_chain(3)).size() == 3);
  CHECK(enumerate_derivations(make_trivial()).size() == 1);
}

TEST_CASE("the two enumeration routes agree") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.name);
    CHECK(detail::enumerate_maps_by_filter(*entry.semiring) ==
          detail::enumerate_maps_by_dfs(*entry.semiring));
  }
  // beyond the filter fallback threshold, so the pruning route is the one
  // under test
  for (auto s : {make_chain(5), make_chain(6), make_mod_ring(5)}) {
    CAPTURE(s->name());
    CHECK(detail::enumerate_maps_by_filter(*s) == detail::enumerate_maps_by_dfs(*s));
  }
}

TEST_CASE("check_derivation examples") {
  auto b2 = make_bool2();
  CHECK(check_derivation(*b2, {0, 1}).ok);  // identity

  auto bad = check_derivation(*b2, {1, 1});  // constant 1
  REQUIRE_FALSE(bad.ok);
  CHECK(bad.identity == "leibniz");
  CHECK(bad.x == 0);
  CHECK(bad.y == 0);

  auto z2 = make_mod_ring(2);
  auto bad2 = check_derivation(*z2, {0, 1});  // identity fails the Leibniz rule on Z2
  REQUIRE_FALSE(bad2.ok);
  CHECK(bad2.identity == "leibniz");
  CHECK(bad2.x == 1);
  CHECK(bad2.y == 1);
}

TEST_CASE("map structure errors") {
  auto b2 = make_bool2();
  CHECK_THROWS_AS(check_derivation(*b2, {0}), MalformedMap);
  CHECK_THROWS_AS(check_derivation(*b2, {0, 7}), MalformedMap);
  CHECK_THROWS_AS(Derivation(b2, {1, 1}), InvalidDerivation);
}

TEST_CASE("zero derivation is valid everywhere and maps 0 to 0") {
  for (const auto& entry : builtin_corpus()) {
    auto d0 = zero_derivation(entry.semiring);
    CHECK(d0.is_zero_map());
    CHECK(check_derivation(*entry.semiring, d0.map()).ok);
    for (const auto& d : enumerate_derivations(entry.semiring))
      CHECK(d(entry.semiring->zero()) == entry.semiring->zero());
  }
}

TEST_CASE("derivations form a commutative monoid under pointwise sum") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.name);
    auto all = enumerate_derivations(entry.semiring);
    auto d0 = zero_derivation(entry.semiring);
    auto member = [&](const Derivation& d) {
      for (const auto& e : all)
        if (e.map() == d.map()) return true;
      return false;
    };
    for (const auto& d1 : all) {
      CHECK(add_derivations(d0, d1) == d1);  // identity
      for (const auto& d2 : all) {
        auto sum = add_derivations(d1, d2);
        CHECK(member(sum));                                // closure
        CHECK(sum == add_derivations(d2, d1));             // commutativity
        for (const auto& d3 : all)                         // associativity
          CHECK(add_derivations(sum, d3) == add_derivations(d1, add_derivations(d2, d3)));
      }
    }
  }
}

TEST_CASE("id + id = id on B2") {
  auto b2 = make_bool2();
  Derivation id(b2, {0, 1});
  CHECK(add_derivations(id, id) == id);  // 1 OR 1 = 1 pointwise
}

TEST_CASE("adding derivations from different instances fails") {
  auto a = make_bool2();
  auto b = make_bool2();
  CHECK_THROWS_AS(add_derivations(zero_derivation(a), zero_derivation(b)), SemiringMismatch);
}

TEST_CASE("product expansion equals d of the product, all lists up to length 4") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.name);
    const auto& s = *entry.semiring;
    const int n = s.order();
    for (const auto& d : enumerate_derivations(entry.semiring)) {
      std::vector<int> factors;
      auto rec = [&](auto&& self, int depth) -> void {
        if (!factors.empty()) {
          int product = factors[0];
          for (std::size_t j = 1; j < factors.size(); ++j) product = s.mul(product, factors[j]);
          CHECK(derive_product(d, factors) == d(product));
        }
        if (depth == 4) return;
        for (int a = 0; a < n; ++a) {
          factors.push_back(a);
          self(self, depth + 1);
          factors.pop_back();
        }
      };
      rec(rec, 0);
    }
  }
}

TEST_CASE("repeated factors reduce to n * a^(n-1) * d(a) in commutative semirings") {
  for (const auto& entry : builtin_corpus()) {
    if (!is_commutative(*entry.semiring)) continue;
    CAPTURE(entry.name);
    const auto& s = *entry.semiring;
    for (const auto& d : enumerate_derivations(entry.semiring))
      for (int a = 0; a < s.order(); ++a)
        for (int k = 1; k <= 4; ++k) {
          std::vector<int> factors(k, a);
          const int lhs = derive_product(d, factors);
          int rhs = d(a);
          if (k > 1) rhs = s.mul(power(s, a, k - 1), d(a));
          rhs = repeated_sum(s, rhs, k);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("single factor and empty factor list") {
  auto b2 = make_bool2();
  Derivation id(b2, {0, 1});
  CHECK(derive_product(id, std::vector<int>{1}) == 1);
  CHECK(derive_product(id, std::vector<int>{1, 1, 1}) == 1);
  CHECK_THROWS_AS(derive_product(id, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("element-level API") {
  auto b2 = make_bool2();
  Derivation id(b2, {0, 1});
  CHECK(id(b2->elem(1)) == b2->elem(1));
  std::vector<Elem> factors{b2->elem(1), b2->elem(1), b2->elem(1)};
  CHECK(derive_product(id, std::span<const Elem>(factors)).index() == 1);
  // elements of a different instance are rejected
  auto other = make_bool2();
  CHECK_THROWS_AS(id(other->elem(1)), SemiringMismatch);
  std::vector<Elem> mixed{other->elem(1)};
  CHECK_THROWS_AS(derive_product(id, std::span<const Elem>(mixed)), SemiringMismatch);
}

TEST_CASE("surjectivity and injectivity") {
  auto b2 = make_bool2();
  Derivation id(b2, {0, 1});
  CHECK(is_surjective(id));
  CHECK(is_injective(id));
  auto d0 = zero_derivation(b2);
  CHECK_FALSE(is_surjective(d0));
  CHECK_FALSE(is_injective(d0));
  auto trivial = make_trivial();
  CHECK(is_surjective(zero_derivation(trivial)));
  CHECK(is_injective(zero_derivation(trivial)));
}

TEST_CASE("surjective iff every element integrable; injective iff integrals unique") {
  for (const auto& entry : builtin_corpus()) {
    CAPTURE(entry.name);
    for (const auto& d : enumerate_derivations(entry.semiring)) {
      IntegralTable table(d);
      CHECK(is_surjective(d) == (table.integrables().size() == entry.semiring->order()));
      bool all_unique = true;
      for (int b = 0; b < entry.semiring->order(); ++b)
        if (table.integral_set(b).size() > 1) all_unique = false;
      CHECK(is_injective(d) == all_unique);
    }
  }
}

TEST_CASE("d commutes with additive inversion") {
  for (const auto& entry : builtin_corpus()) {
    const auto& s = *entry.semiring;
    for (const auto& d : enumerate_derivations(entry.semiring))
      for (int a = 0; a < s.order(); ++a)
        if (auto neg_a = additive_inverse_idx(s, a)) {
          auto neg_da = additive_inverse_idx(s, d(a));
          REQUIRE(neg_da.has_value());  // d(a) inherits invertibility
          CHECK(d(*neg_a) == *neg_da);
        }
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_derivations(make_chain(13)), CapacityExceeded);
  CHECK_NOTHROW(enumerate_derivations(make_chain(13), 13));
  CHECK(enumerate_derivations(make_chain(12)).size() == 12);  // at the default cap
}

TEST_CASE("enumeration on a mid-size chain exercises the pruning route") {
  // order 6 > the filter fallback threshold
  auto c6 = make_chain(6);
  auto all = enumerate_derivations(c6);
  CHECK(all.size() == 6);  // one derivation per cut, as on C3 and C4
  for (const auto& d : all) CHECK(check_derivation(*c6, d.map()).ok);
}
