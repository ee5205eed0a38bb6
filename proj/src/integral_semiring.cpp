#include "semint/integral_semiring.hpp"

namespace semint {

ClosureCheck check_closure_condition(const Derivation& d) {
  IntegralTable table(d);
  const auto ints = table.integrables().elements();
  for (int a : ints)
    for (int b : ints)
      if (!table.integrables().contains(d.semiring().mul(a, b)))
        return {false, std::make_pair(a, b)};
  return {};
}

IntegralFamily::IntegralFamily(const Derivation& d)
    : d_(d), table_(d), member_of_(d.semiring().order(), -1) {
  const FiniteSemiring& s = d_.semiring();
  for (int x : table_.integrables().elements()) {
    member_of_[x] = static_cast<int>(labels_.size()) + 1;
    labels_.push_back(x);
  }

  // Well-definedness of the labeling: distinct integrable elements must have
  // distinct integral sets. That holds because d maps I(x) onto {x}; a
  // failure here is an implementation bug, not bad input.
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      detail::internal_check(table_.integral_set(labels_[i]) != table_.integral_set(labels_[j]),
                             "integral sets of distinct integrables must differ");

  const int m = member_count();
  add_.assign(static_cast<std::size_t>(m) * m, kEmptyMember);
  mul_.assign(static_cast<std::size_t>(m) * m, kEmptyMember);
  for (int i = 0; i < m; ++i) {
    add_[index(i, kEmptyMember)] = i;
    add_[index(kEmptyMember, i)] = i;
  }
  for (int i = 1; i < m; ++i)
    for (int j = 1; j < m; ++j) {
      const int sum = s.add(labels_[i - 1], labels_[j - 1]);
      const int prod = s.mul(labels_[i - 1], labels_[j - 1]);
      detail::internal_check(member_of_[sum] >= 1, "integrables not closed under +");
      detail::internal_check(member_of_[prod] >= 1, "closure condition not established");
      add_[index(i, j)] = member_of_[sum];
      mul_[index(i, j)] = member_of_[prod];
    }
}

std::size_t IntegralFamily::index(int m1, int m2) const {
  const int m = member_count();
  if (m1 < 0 || m1 >= m || m2 < 0 || m2 >= m)
    throw std::out_of_range("IntegralFamily: member index out of range");
  return static_cast<std::size_t>(m1) * m + m2;
}

int IntegralFamily::label_of(int m) const {
  if (m < 1 || m >= member_count())
    throw std::out_of_range("IntegralFamily: no label for this member");
  return labels_[static_cast<std::size_t>(m) - 1];
}

const ElemSet& IntegralFamily::member_set(int m) const { return table_.integral_set(label_of(m)); }

std::optional<int> IntegralFamily::member_of(int x) const {
  if (x < 0 || x >= static_cast<int>(member_of_.size()))
    throw std::out_of_range("IntegralFamily: element out of range");
  if (member_of_[x] < 0) return std::nullopt;
  return member_of_[x];
}

std::string IntegralFamily::label_string(int m) const {
  if (m == kEmptyMember) return "empty";
  return "[" + std::to_string(label_of(m)) + "]";
}

IntegralFamily build_integral_semiring(const Derivation& d) {
  auto closure = check_closure_condition(d);
  if (!closure.holds)
    throw ClosureViolated("integrables are not closed under multiplication: witness (" +
                          std::to_string(closure.witness->first) + ", " +
                          std::to_string(closure.witness->second) + ")");
  return IntegralFamily(d);
}

AxiomReport validate_nonunitary_semiring(const IntegralFamily& fam) {
  const int m = fam.member_count();
  std::vector<int> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      add[static_cast<std::size_t>(i) * m + j] = fam.add(i, j);
      mul[static_cast<std::size_t>(i) * m + j] = fam.mul(i, j);
    }
  return detail::validate_axiom_tables(m, add, mul, IntegralFamily::kEmptyMember, std::nullopt);
}

}  // namespace semint
