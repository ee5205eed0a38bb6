#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semint/errors.hpp"

namespace semint {

using Rational = boost::multiprecision::cpp_rational;

/// True for primes below 2^31 (trial division; desk scale).
bool is_prime(std::uint32_t p);

/// 0 for the rationals, or a prime p for GF(p). Throws ParseError otherwise.
void validate_characteristic(std::uint32_t characteristic);

/// A field scalar: an exact rational (characteristic 0) or a residue mod a
/// prime p. All arithmetic is exact; combining scalars of different
/// characteristics throws FieldMismatch. Division by zero throws
/// std::domain_error.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar rational(Rational v);
  static Scalar rational(long long num, long long den);
  static Scalar residue(std::uint32_t p, long long v);
  static Scalar zero(std::uint32_t characteristic);
  static Scalar one(std::uint32_t characteristic);
  /// The image of the integer k in the field (k mod p, or k as a rational).
  static Scalar from_integer(std::uint32_t characteristic, long long k);

  std::uint32_t characteristic() const { return char_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar negate() const;
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "num/den" (den omitted when 1) or the residue digits.
  std::string str() const;

  const Rational& rat() const;  // characteristic 0 only
  long long res() const;        // characteristic p only

 private:
  std::uint32_t char_ = 0;
  Rational q_;
  std::int64_t r_ = 0;
};

/// Univariate polynomial with exact coefficients over Q or GF(p), stored
/// low degree first with trailing zeros stripped. The zero polynomial has
/// an empty coefficient sequence and degree() == -1.
class Polynomial {
 public:
  explicit Polynomial(std::uint32_t characteristic);  // zero polynomial
  Polynomial(std::uint32_t characteristic, std::vector<Scalar> coeffs);

  static Polynomial zero(std::uint32_t characteristic) { return Polynomial(characteristic); }
  static Polynomial monomial(std::uint32_t characteristic, Scalar coeff, unsigned exponent);

  /// Parses the coefficient-list format "a0 a1 a2 ..." (rationals as
  /// "num/den"). Throws ParseError on malformed input.
  static Polynomial parse(std::uint32_t characteristic, std::string_view text);

  std::uint32_t characteristic() const { return char_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^i; zero beyond the degree.
  Scalar coeff(unsigned i) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Coefficient-list format, "0" for the zero polynomial.
  std::string str() const;
  /// Conventional rendering, highest degree first: "6x + 2", "1/2 x^2".
  std::string pretty() const;

 private:
  void strip();
  std::uint32_t char_;
  std::vector<Scalar> coeffs_;
};

/// Coefficient-shift differentiation: sum i·a_i x^(i-1), with i reduced into
/// the field. Satisfies additivity and the Leibniz rule.
Polynomial poly_derivative(const Polynomial& p);

/// Whether p has an antiderivative: always in characteristic 0; in
/// characteristic p exactly when every coefficient at an exponent
/// ≡ -1 (mod p) vanishes.
bool is_integrable(const Polynomial& p);

inline constexpr unsigned kDefaultDegreeBound = 8;

/// Symbolic description of the constants (kernel of the derivative): all of
/// F in characteristic 0, the span of {x^i : i ≡ 0 mod p} in characteristic
/// p. degree_bound limits enumeration probes only; the set itself is
/// unbounded.
struct ConstantSpace {
  std::uint32_t characteristic = 0;
  unsigned degree_bound = kDefaultDegreeBound;

  bool contains(const Polynomial& q) const;
  /// Exponents of the basis monomials up to degree_bound.
  std::vector<unsigned> basis_exponents() const;
  std::string describe() const;  // "F" or "span{1, x^3, x^6, ...}"
};

ConstantSpace constants_description(std::uint32_t characteristic,
                                    unsigned degree_bound = kDefaultDegreeBound);

/// An antiderivative plus the constant space: the full integral set of p is
/// {particular + c : c in the constant space}. The particular antiderivative
/// is canonical: its coefficient at every constant-space exponent is zero.
struct IntegralDescription {
  Polynomial particular;
  ConstantSpace constant_space;
};

/// Termwise integration a_i x^i ↦ a_i/(i+1) x^(i+1). Throws NotIntegrable
/// (naming the offending coefficient index) when no antiderivative exists.
/// poly_derivative(particular) == p is asserted.
IntegralDescription poly_integrate(const Polynomial& p,
                                   unsigned space_degree_bound = kDefaultDegreeBound);

/// The solution set of d(q) = p over {q : deg q <= degree_bound}, obtained by
/// solving for each coefficient of q independently: an affine family
/// particular + span{x^e : e free}. Free exponents are 0 and, in
/// characteristic p, every multiple of p up to the bound.
class AntiderivativeFamily {
 public:
  bool empty() const { return empty_; }
  std::uint32_t characteristic() const { return char_; }
  unsigned degree_bound() const { return bound_; }
  const Polynomial& particular() const;
  const std::vector<unsigned>& free_exponents() const { return free_; }

  /// Number of members; finite characteristic only.
  unsigned long long size() const;
  /// All members, deterministically ordered; finite characteristic only
  /// (throws CapacityExceeded for characteristic 0 or oversized families).
  std::vector<Polynomial> enumerate() const;
  /// Membership test; works for any characteristic.
  bool contains(const Polynomial& q) const;

 private:
  friend AntiderivativeFamily bounded_integral_set(const Polynomial& p, unsigned degree_bound);
  AntiderivativeFamily(std::uint32_t characteristic, unsigned bound)
      : char_(characteristic), bound_(bound), particular_(characteristic) {}

  std::uint32_t char_;
  unsigned bound_;
  bool empty_ = true;
  Polynomial particular_;
  std::vector<unsigned> free_;
};

/// Requires degree_bound >= deg(p)+1 (throws BoundTooSmall otherwise).
/// An empty family signals non-integrability.
AntiderivativeFamily bounded_integral_set(const Polynomial& p, unsigned degree_bound);

struct PolyClosureResult {
  bool holds = true;
  // integrable monomial pair whose product is not integrable
  std::optional<std::pair<Polynomial, Polynomial>> witness;
};

/// Whether products of integrable polynomials stay integrable, probed over
/// all integrable monomial pairs with exponents <= degree_bound (support
/// suffices: integrability depends only on which exponents occur). Holds
/// exactly in characteristics 0 and 2; for p >= 3 the witness is
/// (x, x^(p-2)) with product x^(p-1). Requires degree_bound >= p for p >= 3
/// (throws BoundTooSmall).
PolyClosureResult closure_condition(std::uint32_t characteristic, unsigned degree_bound);

}  // namespace semint
