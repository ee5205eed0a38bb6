#include "semint/derivation.hpp"

#include <algorithm>

namespace semint {

static void check_map_structure(const FiniteSemiring& s, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != s.order())
    throw MalformedMap("map length " + std::to_string(map.size()) + " does not match order " +
                       std::to_string(s.order()));
  for (int v : map)
    if (v < 0 || v >= s.order())
      throw MalformedMap("map value " + std::to_string(v) + " out of range");
}

DerivationCheck check_derivation(const FiniteSemiring& s, const std::vector<int>& map) {
  check_map_structure(s, map);
  const int n = s.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[s.add(x, y)] != s.add(map[x], map[y]))
        return {false, "additivity", x, y};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[s.mul(x, y)] != s.add(s.mul(map[x], y), s.mul(x, map[y])))
        return {false, "leibniz", x, y};
  return {};
}

Derivation::Derivation(std::shared_ptr<const FiniteSemiring> semiring, std::vector<int> map)
    : semiring_(std::move(semiring)), map_(std::move(map)) {
  if (!semiring_) throw std::invalid_argument("Derivation: null semiring");
  auto check = check_derivation(*semiring_, map_);
  if (!check.ok)
    throw InvalidDerivation("map violates " + check.identity + " at (" + std::to_string(check.x) +
                            ", " + std::to_string(check.y) + ")");
  detail::internal_check(map_[semiring_->zero()] == semiring_->zero(),
                         "a derivation must send 0 to 0");
}

Elem Derivation::operator()(Elem x) const {
  semiring_->require_owned(x);
  return semiring_->elem(map_[x.index()]);
}

bool Derivation::is_zero_map() const {
  return std::all_of(map_.begin(), map_.end(), [&](int v) { return v == semiring_->zero(); });
}

Derivation zero_derivation(std::shared_ptr<const FiniteSemiring> s) {
  if (!s) throw std::invalid_argument("zero_derivation: null semiring");
  std::vector<int> map(s->order(), s->zero());
  return Derivation(std::move(s), std::move(map));
}

Derivation add_derivations(const Derivation& d1, const Derivation& d2) {
  if (d1.semiring_ptr().get() != d2.semiring_ptr().get())
    throw SemiringMismatch("derivations live on different semiring instances");
  const FiniteSemiring& s = d1.semiring();
  std::vector<int> map(s.order());
  for (int x = 0; x < s.order(); ++x) map[x] = s.add(d1(x), d2(x));
  return Derivation(d1.semiring_ptr(), std::move(map));
}

namespace detail {

std::vector<std::vector<int>> enumerate_maps_by_filter(const FiniteSemiring& s) {
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

std::vector<std::vector<int>> enumerate_maps_by_dfs(const FiniteSemiring& s) {
  const int n = s.order();

  // Constraints grouped by the largest map index they mention, so each is
  // checked exactly once, as soon as all of its arguments are assigned.
  struct Pair {
    int x, y;
  };
  std::vector<std::vector<Pair>> add_ready(n), mul_ready(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add_ready[std::max({x, y, s.add(x, y)})].push_back({x, y});
      mul_ready[std::max({x, y, s.mul(x, y)})].push_back({x, y});
    }

  std::vector<std::vector<int>> out;
  std::vector<int> map(n, -1);

  auto consistent_at = [&](int k) {
    for (auto [x, y] : add_ready[k])
      if (map[s.add(x, y)] != s.add(map[x], map[y])) return false;
    for (auto [x, y] : mul_ready[k])
      if (map[s.mul(x, y)] != s.add(s.mul(map[x], y), s.mul(x, map[y]))) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(map);
      return;
    }
    for (int v = 0; v < n; ++v) {
      map[k] = v;
      if (consistent_at(k)) self(self, k + 1);
    }
    map[k] = -1;
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace detail

std::vector<Derivation> enumerate_derivations(std::shared_ptr<const FiniteSemiring> s, int cap) {
  if (!s) throw std::invalid_argument("enumerate_derivations: null semiring");
  const int n = s->order();
  if (n > cap)
    throw CapacityExceeded("order " + std::to_string(n) + " exceeds enumeration cap " +
                           std::to_string(cap));
  auto maps = n <= 4 ? detail::enumerate_maps_by_filter(*s) : detail::enumerate_maps_by_dfs(*s);
  std::vector<Derivation> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(s, std::move(m));
  return out;
}

int derive_product(const Derivation& d, const std::vector<int>& factors) {
  if (factors.empty()) throw std::invalid_argument("derive_product: empty factor list");
  const FiniteSemiring& s = d.semiring();
  const int n = static_cast<int>(factors.size());

  auto term = [&](int i) {
    // a1···a(i-1) · d(ai) · a(i+1)···an, left-associated
    int acc = i == 0 ? d(factors[0]) : factors[0];
    for (int j = 1; j < n; ++j) acc = s.mul(acc, j == i ? d(factors[j]) : factors[j]);
    return acc;
  };

  int sum = term(0);
  for (int i = 1; i < n; ++i) sum = s.add(sum, term(i));

  int product = factors[0];
  for (int j = 1; j < n; ++j) product = s.mul(product, factors[j]);
  detail::internal_check(sum == d(product), "product expansion diverged from d(product)");
  return sum;
}

Elem derive_product(const Derivation& d, std::span<const Elem> factors) {
  const FiniteSemiring& s = d.semiring();
  std::vector<int> idx;
  idx.reserve(factors.size());
  for (Elem e : factors) {
    s.require_owned(e);
    idx.push_back(e.index());
  }
  return s.elem(derive_product(d, idx));
}

bool is_surjective(const Derivation& d) {
  const int n = d.semiring().order();
  ElemSet image(n);
  for (int x = 0; x < n; ++x) image.insert(d(x));
  return image.size() == n;
}

bool is_injective(const Derivation& d) {
  const int n = d.semiring().order();
  ElemSet seen(n);
  for (int x = 0; x < n; ++x) {
    if (seen.contains(d(x))) return false;
    seen.insert(d(x));
  }
  return true;
}

}  // namespace semint
