#include "semint/semiring.hpp"

namespace semint {

Elem::Elem(const FiniteSemiring& owner, int index) : owner_(&owner), index_(index) {
  if (index < 0 || index >= owner.order()) throw std::out_of_range("Elem: index out of range");
}

static std::vector<int> flatten_table(int order, const std::vector<std::vector<int>>& table,
                                      const char* which) {
  if (static_cast<int>(table.size()) != order)
    throw MalformedTable(std::string(which) + " table: expected " + std::to_string(order) +
                         " rows, got " + std::to_string(table.size()));
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(order) * order);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != order)
      throw MalformedTable(std::string(which) + " table: row of length " +
                           std::to_string(row.size()) + ", expected " + std::to_string(order));
    for (int v : row) {
      if (v < 0 || v >= order)
        throw MalformedTable(std::string(which) + " table: entry " + std::to_string(v) +
                             " out of range [0, " + std::to_string(order) + ")");
      flat.push_back(v);
    }
  }
  return flat;
}

FiniteSemiring::FiniteSemiring(int order, std::vector<std::vector<int>> add_table,
                               std::vector<std::vector<int>> mul_table, int zero, int one,
                               std::string name)
    : order_(order), zero_(zero), one_(one), name_(std::move(name)) {
  if (order < 1) throw MalformedTable("order must be positive");
  add_ = flatten_table(order, add_table, "add");
  mul_ = flatten_table(order, mul_table, "mul");
  if (zero < 0 || zero >= order) throw MalformedTable("zero index out of range");
  if (one < 0 || one >= order) throw MalformedTable("one index out of range");
}

std::size_t FiniteSemiring::index(int a, int b) const {
  if (a < 0 || a >= order_ || b < 0 || b >= order_)
    throw std::out_of_range("FiniteSemiring: element index out of range");
  return static_cast<std::size_t>(a) * order_ + b;
}

void FiniteSemiring::require_owned(Elem e) const {
  if (&e.semiring() != this)
    throw SemiringMismatch("element belongs to a different semiring instance");
}

Elem FiniteSemiring::add(Elem a, Elem b) const {
  require_owned(a);
  require_owned(b);
  return elem(add(a.index(), b.index()));
}

Elem FiniteSemiring::mul(Elem a, Elem b) const {
  require_owned(a);
  require_owned(b);
  return elem(mul(a.index(), b.index()));
}

bool operator==(const FiniteSemiring& a, const FiniteSemiring& b) {
  return a.order_ == b.order_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.add_ == b.add_ &&
         a.mul_ == b.mul_;
}

namespace {

using Table = std::vector<int>;

int at(const Table& t, int n, int a, int b) { return t[static_cast<std::size_t>(a) * n + b]; }

// Scans one axiom over its full tuple space in lexicographic order and
// records the first violation, if any.
template <class Pred, class Tuple>
void scan(AxiomReport& report, const std::string& axiom, int n, int arity, Pred holds,
          Tuple witness) {
  std::vector<int> t(arity, 0);
  while (true) {
    if (!holds(t)) {
      report.passed = false;
      report.violations.push_back({axiom, witness(t)});
      return;
    }
    int k = arity - 1;
    while (k >= 0 && t[k] == n - 1) t[k--] = 0;
    if (k < 0) return;
    ++t[k];
  }
}

AxiomReport validate_axioms(int n, const Table& add, const Table& mul, int zero,
                            std::optional<int> one) {
  AxiomReport report;
  auto id = [](const std::vector<int>& t) { return t; };

  scan(report, "add-commutative", n, 2,
       [&](const std::vector<int>& t) { return at(add, n, t[0], t[1]) == at(add, n, t[1], t[0]); },
       id);
  scan(report, "add-associative", n, 3,
       [&](const std::vector<int>& t) {
         return at(add, n, at(add, n, t[0], t[1]), t[2]) ==
                at(add, n, t[0], at(add, n, t[1], t[2]));
       },
       id);
  scan(report, "add-identity", n, 1,
       [&](const std::vector<int>& t) { return at(add, n, t[0], zero) == t[0]; }, id);
  scan(report, "mul-associative", n, 3,
       [&](const std::vector<int>& t) {
         return at(mul, n, at(mul, n, t[0], t[1]), t[2]) ==
                at(mul, n, t[0], at(mul, n, t[1], t[2]));
       },
       id);
  scan(report, "left-distributive", n, 3,
       [&](const std::vector<int>& t) {
         return at(mul, n, t[0], at(add, n, t[1], t[2])) ==
                at(add, n, at(mul, n, t[0], t[1]), at(mul, n, t[0], t[2]));
       },
       id);
  scan(report, "right-distributive", n, 3,
       [&](const std::vector<int>& t) {
         return at(mul, n, at(add, n, t[1], t[2]), t[0]) ==
                at(add, n, at(mul, n, t[1], t[0]), at(mul, n, t[2], t[0]));
       },
       id);
  scan(report, "annihilation", n, 1,
       [&](const std::vector<int>& t) {
         return at(mul, n, t[0], zero) == zero && at(mul, n, zero, t[0]) == zero;
       },
       id);
  if (one) {
    scan(report, "mul-identity", n, 1,
         [&](const std::vector<int>& t) {
           return at(mul, n, t[0], *one) == t[0] && at(mul, n, *one, t[0]) == t[0];
         },
         id);
  }
  return report;
}

}  // namespace

namespace detail {

AxiomReport validate_axiom_tables(int n, const std::vector<int>& add, const std::vector<int>& mul,
                                  int zero, std::optional<int> one) {
  return validate_axioms(n, add, mul, zero, one);
}

}  // namespace detail

AxiomReport validate_semiring(const FiniteSemiring& s, int order_cap) {
  const int n = s.order();
  if (n > order_cap)
    throw CapacityExceeded("order " + std::to_string(n) + " exceeds validation cap " +
                           std::to_string(order_cap));
  Table add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a) * n + b] = s.add(a, b);
      mul[static_cast<std::size_t>(a) * n + b] = s.mul(a, b);
    }
  return validate_axioms(n, add, mul, s.zero(), s.one());
}

bool is_commutative(const FiniteSemiring& s) {
  const int n = s.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (s.mul(a, b) != s.mul(b, a)) return false;
  return true;
}

std::optional<int> additive_inverse_idx(const FiniteSemiring& s, int a) {
  std::optional<int> found;
  for (int b = 0; b < s.order(); ++b) {
    if (s.add(a, b) == s.zero()) {
      // unique once + is commutative, associative and 0-neutral
      detail::internal_check(!found || *found == b, "additive inverse not unique");
      if (!found) found = b;
    }
  }
  return found;
}

std::optional<int> multiplicative_inverse_idx(const FiniteSemiring& s, int a) {
  std::optional<int> found;
  for (int b = 0; b < s.order(); ++b) {
    if (s.mul(a, b) == s.one() && s.mul(b, a) == s.one()) {
      detail::internal_check(!found || *found == b, "multiplicative inverse not unique");
      if (!found) found = b;
    }
  }
  return found;
}

std::optional<Elem> additive_inverse(const FiniteSemiring& s, Elem a) {
  s.require_owned(a);
  auto idx = additive_inverse_idx(s, a.index());
  if (!idx) return std::nullopt;
  return s.elem(*idx);
}

std::optional<Elem> multiplicative_inverse(const FiniteSemiring& s, Elem a) {
  s.require_owned(a);
  auto idx = multiplicative_inverse_idx(s, a.index());
  if (!idx) return std::nullopt;
  return s.elem(*idx);
}

std::optional<Elem> left_inverse(const FiniteSemiring& s, Elem a) {
  s.require_owned(a);
  for (int b = 0; b < s.order(); ++b)
    if (s.mul(b, a.index()) == s.one()) return s.elem(b);
  return std::nullopt;
}

std::optional<Elem> right_inverse(const FiniteSemiring& s, Elem a) {
  s.require_owned(a);
  for (int b = 0; b < s.order(); ++b)
    if (s.mul(a.index(), b) == s.one()) return s.elem(b);
  return std::nullopt;
}

int power(const FiniteSemiring& s, int a, int n) {
  if (n < 1) throw std::invalid_argument("power: exponent must be >= 1");
  int p = a;
  for (int i = 1; i < n; ++i) p = s.mul(p, a);
  return p;
}

Elem power(const FiniteSemiring& s, Elem a, int n) {
  s.require_owned(a);
  return s.elem(power(s, a.index(), n));
}

int repeated_sum(const FiniteSemiring& s, int a, int n) {
  if (n < 1) throw std::invalid_argument("repeated_sum: count must be >= 1");
  int r = a;
  for (int i = 1; i < n; ++i) r = s.add(r, a);
  return r;
}

static void require_carrier(const FiniteSemiring& s, const ElemSet& a) {
  if (a.universe() != s.order())
    throw SemiringMismatch("ElemSet universe does not match semiring order");
}

ElemSet set_add(const FiniteSemiring& s, const ElemSet& a, const ElemSet& b) {
  require_carrier(s, a);
  require_carrier(s, b);
  ElemSet out(s.order());
  for (int x = 0; x < s.order(); ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < s.order(); ++y)
      if (b.contains(y)) out.insert(s.add(x, y));
  }
  return out;
}

ElemSet set_mul(const FiniteSemiring& s, const ElemSet& a, const ElemSet& b) {
  require_carrier(s, a);
  require_carrier(s, b);
  ElemSet out(s.order());
  for (int x = 0; x < s.order(); ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < s.order(); ++y)
      if (b.contains(y)) out.insert(s.mul(x, y));
  }
  return out;
}

ElemSet set_add_elem(const FiniteSemiring& s, const ElemSet& a, int c) {
  require_carrier(s, a);
  ElemSet out(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (a.contains(x)) out.insert(s.add(x, c));
  return out;
}

ElemSet elem_mul_set(const FiniteSemiring& s, int c, const ElemSet& a) {
  require_carrier(s, a);
  ElemSet out(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (a.contains(x)) out.insert(s.mul(c, x));
  return out;
}

ElemSet set_mul_elem(const FiniteSemiring& s, const ElemSet& a, int c) {
  require_carrier(s, a);
  ElemSet out(s.order());
  for (int x = 0; x < s.order(); ++x)
    if (a.contains(x)) out.insert(s.mul(x, c));
  return out;
}

}  // namespace semint
