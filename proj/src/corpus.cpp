#include "semint/corpus.hpp"

#include <algorithm>

#include "semint/matrix_extension.hpp"

namespace semint {

namespace {

using Table = std::vector<std::vector<int>>;

}  // namespace

std::shared_ptr<const FiniteSemiring> make_trivial() {
  return std::make_shared<const FiniteSemiring>(1, Table{{0}}, Table{{0}}, 0, 0, "trivial");
}

std::shared_ptr<const FiniteSemiring> make_bool2() {
  return std::make_shared<const FiniteSemiring>(2, Table{{0, 1}, {1, 1}}, Table{{0, 0}, {0, 1}},
                                                0, 1, "B2");
}

std::shared_ptr<const FiniteSemiring> make_mod_ring(int m) {
  Table add(m, std::vector<int>(m)), mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[a][b] = (a + b) % m;
      mul[a][b] = (a * b) % m;
    }
  return std::make_shared<const FiniteSemiring>(m, std::move(add), std::move(mul), 0, 1 % m,
                                                "Z" + std::to_string(m));
}

std::shared_ptr<const FiniteSemiring> make_chain(int n) {
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a][b] = std::max(a, b);
      mul[a][b] = std::min(a, b);
    }
  return std::make_shared<const FiniteSemiring>(n, std::move(add), std::move(mul), 0, n - 1,
                                                "C" + std::to_string(n));
}

std::shared_ptr<const FiniteSemiring> make_truncated_gf3() {
  // elements a + b·x + c·x², encoded as a + 3b + 9c
  const int n = 27;
  auto enc = [](int a, int b, int c) { return a + 3 * b + 9 * c; };
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2) {
              const int i = enc(a1, b1, c1), j = enc(a2, b2, c2);
              add[i][j] = enc((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2) % 3);
              // multiplication truncated at x^3
              mul[i][j] = enc((a1 * a2) % 3, (a1 * b2 + b1 * a2) % 3,
                              (a1 * c2 + b1 * b2 + c1 * a2) % 3);
            }
  return std::make_shared<const FiniteSemiring>(n, std::move(add), std::move(mul), 0, 1,
                                                "T3");
}

std::vector<int> truncated_gf3_derivative_map() {
  // d(a + b·x + c·x²) = b + 2c·x
  std::vector<int> map(27);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) map[a + 3 * b + 9 * c] = b + 3 * ((2 * c) % 3);
  return map;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> v;
    auto tri2 = [](const std::shared_ptr<const FiniteSemiring>& base) {
      return build_matrix_extension(*base).semiring;
    };
    // regression anchors recorded from the first enumeration run; the census
    // tests re-enumerate and compare
    v.push_back({"trivial", make_trivial(), 1, {{1, 1}}});
    v.push_back({"B2", make_bool2(), 2, {{2, 1}, {1, 2}}});
    v.push_back({"Z2", make_mod_ring(2), 1, {{2, 1}}});
    v.push_back({"Z3", make_mod_ring(3), 1, {{3, 1}}});
    v.push_back({"Z4", make_mod_ring(4), 1, {{4, 1}}});
    v.push_back({"C3", make_chain(3), 3, {{3, 1}, {1, 2}, {1, 3}}});
    v.push_back({"C4", make_chain(4), 4, {{4, 1}, {1, 2}, {1, 3}, {1, 4}}});
    v.push_back({"tri2(B2)", tri2(make_bool2()), 6,
                 {{4, 1}, {2, 2}, {2, 2}, {1, 2}, {1, 4}, {1, 3}}});
    v.push_back({"tri2(Z2)", tri2(make_mod_ring(2)), 4, {{4, 1}, {2, 2}, {2, 2}, {2, 2}}});
    return v;
  }();
  return corpus;
}

std::shared_ptr<const FiniteSemiring> builtin_semiring(const std::string& name) {
  for (const auto& entry : builtin_corpus())
    if (entry.name == name) return entry.semiring;
  if (name == "T3") return make_truncated_gf3();
  return nullptr;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names;
  for (const auto& entry : builtin_corpus()) names.push_back(entry.name);
  names.push_back("T3");
  return names;
}

}  // namespace semint
