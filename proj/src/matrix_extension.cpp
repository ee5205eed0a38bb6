#include "semint/matrix_extension.hpp"

namespace semint {

MatrixExtension build_matrix_extension(const FiniteSemiring& base, int order_cap) {
  const int r = base.order();
  if (static_cast<long long>(r) * r > order_cap)
    throw CapacityExceeded("extension order " + std::to_string(static_cast<long long>(r) * r) +
                           " exceeds cap " + std::to_string(order_cap));
  const int n = r * r;
  auto enc = [r](int x, int y) { return x * r + y; };

  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int x1 = 0; x1 < r; ++x1)
    for (int y1 = 0; y1 < r; ++y1)
      for (int x2 = 0; x2 < r; ++x2)
        for (int y2 = 0; y2 < r; ++y2) {
          const int i = enc(x1, y1), j = enc(x2, y2);
          add[i][j] = enc(base.add(x1, x2), base.add(y1, y2));
          mul[i][j] = enc(base.mul(x1, x2), base.add(base.mul(x1, y2), base.mul(y1, x2)));
        }

  std::string name = base.name().empty() ? "" : "tri2(" + base.name() + ")";
  auto ext = std::make_shared<const FiniteSemiring>(
      n, std::move(add), std::move(mul), enc(base.zero(), base.zero()),
      enc(base.one(), base.zero()), std::move(name));
  return {std::move(ext), r, base.zero()};
}

Derivation MatrixExtension::canonical_derivation() const {
  std::vector<int> map(semiring->order());
  for (int i = 0; i < semiring->order(); ++i) map[i] = encode(base_zero, decode(i).second);
  return Derivation(semiring, std::move(map));
}

std::vector<LawReport> verify_extension_identities(const FiniteSemiring& base) {
  MatrixExtension ext = build_matrix_extension(base);
  const int r = ext.base_order;
  const int n = ext.semiring->order();
  Derivation d = ext.canonical_derivation();
  IntegralTable table(d);

  // base's zero index is base.zero(), not necessarily 0
  const int z = base.zero();

  ElemSet strict_upper(n);  // {(z, y)}
  for (int y = 0; y < r; ++y) strict_upper.insert(ext.encode(z, y));
  ElemSet diagonal(n);  // {(x, z)}
  for (int x = 0; x < r; ++x) diagonal.insert(ext.encode(x, z));
  ElemSet just_zero(n);
  just_zero.insert(ext.semiring->zero());

  std::vector<LawReport> out;

  {
    LawReport rep{"integrables-are-strict-upper", "Int = {(0, y) : y in R}"};
    rep.qualifying = n;
    if (table.integrables() != strict_upper) rep.passed = false;
    out.push_back(std::move(rep));
  }
  {
    LawReport rep{"integral-of-strict-upper", "I((0, y)) = {(x, y) : x in R}"};
    rep.qualifying = r;
    for (int y = 0; y < r; ++y) {
      ElemSet column(n);
      for (int x = 0; x < r; ++x) column.insert(ext.encode(x, y));
      if (table.integral_set(ext.encode(z, y)) != column) {
        rep.passed = false;
        if (!rep.witness) rep.witness = "y=" + std::to_string(y);
      }
    }
    out.push_back(std::move(rep));
  }
  {
    LawReport rep{"constants-are-diagonal", "Const = {(x, 0) : x in R}"};
    rep.qualifying = n;
    if (table.constants() != diagonal) rep.passed = false;
    out.push_back(std::move(rep));
  }
  {
    LawReport rep{"integrable-constant-intersection", "Int ∩ Const = {(0, 0)}"};
    rep.qualifying = n;
    ElemSet inter(n);
    for (int i = 0; i < n; ++i)
      if (table.integrables().contains(i) && table.constants().contains(i)) inter.insert(i);
    if (inter != just_zero) rep.passed = false;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace semint
