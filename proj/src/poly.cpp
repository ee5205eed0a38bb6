#include "semint/poly.hpp"

#include <cassert>
#include <sstream>

namespace semint {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void validate_characteristic(std::uint32_t characteristic) {
  if (characteristic == 0) return;
  if (characteristic >= (1u << 31) || !is_prime(characteristic))
    throw ParseError("characteristic must be 0 or a prime, got " +
                     std::to_string(characteristic));
}

// ---------------------------------------------------------------------------
// Scalar

static std::int64_t mod_reduce(std::uint32_t p, long long v) {
  const std::int64_t m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// extended Euclid; p prime, 0 < a < p
static std::int64_t mod_inverse(std::uint32_t p, std::int64_t a) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  assert(r == 1);
  return t < 0 ? t + p : t;
}

Scalar Scalar::rational(Rational v) {
  Scalar s;
  s.char_ = 0;
  s.q_ = std::move(v);
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // the backing rational type rejects negative denominators
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return rational(Rational(num, den));
}

Scalar Scalar::residue(std::uint32_t p, long long v) {
  validate_characteristic(p);
  if (p == 0) throw FieldMismatch("residue requires a prime characteristic");
  Scalar s;
  s.char_ = p;
  s.r_ = mod_reduce(p, v);
  return s;
}

Scalar Scalar::zero(std::uint32_t characteristic) {
  return characteristic == 0 ? Scalar() : residue(characteristic, 0);
}

Scalar Scalar::one(std::uint32_t characteristic) {
  return characteristic == 0 ? rational(1, 1) : residue(characteristic, 1);
}

Scalar Scalar::from_integer(std::uint32_t characteristic, long long k) {
  return characteristic == 0 ? rational(k, 1) : residue(characteristic, k);
}

bool Scalar::is_zero() const { return char_ == 0 ? q_.is_zero() : r_ == 0; }
bool Scalar::is_one() const { return char_ == 0 ? q_ == 1 : r_ == 1; }

static void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.characteristic() != b.characteristic())
    throw FieldMismatch("scalars of characteristics " + std::to_string(a.characteristic()) +
                        " and " + std::to_string(b.characteristic()));
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(*this, o);
  if (char_ == 0) return rational(q_ + o.q_);
  return residue(char_, r_ + o.r_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + o.negate(); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(*this, o);
  if (char_ == 0) return rational(q_ * o.q_);
  return residue(char_, r_ * o.r_);  // p < 2^31, so the product fits in 64 bits
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::negate() const {
  if (char_ == 0) return rational(-q_);
  return residue(char_, -r_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // flip via division so the sign lands on the numerator
  if (char_ == 0) return rational(Rational(1) / q_);
  return residue(char_, mod_inverse(char_, r_));
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(*this, o);
  return char_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (char_ != 0) return std::to_string(r_);
  std::ostringstream os;
  os << numerator(q_);
  if (denominator(q_) != 1) os << '/' << denominator(q_);
  return os.str();
}

const Rational& Scalar::rat() const {
  if (char_ != 0) throw FieldMismatch("rat() on a residue scalar");
  return q_;
}

long long Scalar::res() const {
  if (char_ == 0) throw FieldMismatch("res() on a rational scalar");
  return r_;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::uint32_t characteristic) : char_(characteristic) {
  validate_characteristic(characteristic);
}

Polynomial::Polynomial(std::uint32_t characteristic, std::vector<Scalar> coeffs)
    : char_(characteristic), coeffs_(std::move(coeffs)) {
  validate_characteristic(characteristic);
  for (const auto& c : coeffs_)
    if (c.characteristic() != char_)
      throw FieldMismatch("coefficient characteristic does not match the polynomial");
  strip();
}

Polynomial Polynomial::monomial(std::uint32_t characteristic, Scalar coeff, unsigned exponent) {
  std::vector<Scalar> cs(exponent + 1, Scalar::zero(characteristic));
  cs[exponent] = std::move(coeff);
  return Polynomial(characteristic, std::move(cs));
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(unsigned i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return Scalar::zero(char_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (char_ != o.char_) throw FieldMismatch("adding polynomials over different fields");
  std::vector<Scalar> out(std::max(coeffs_.size(), o.coeffs_.size()), Scalar::zero(char_));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<unsigned>(i)) + o.coeff(static_cast<unsigned>(i));
  return Polynomial(char_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (char_ != o.char_) throw FieldMismatch("multiplying polynomials over different fields");
  if (is_zero() || o.is_zero()) return Polynomial(char_);
  std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(char_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + coeffs_[i] * o.coeffs_[j];
  return Polynomial(char_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  std::vector<Scalar> out(coeffs_);
  for (auto& v : out) v = v * c;
  return Polynomial(char_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (char_ != o.char_) return false;
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != o.coeffs_[i]) return false;
  return true;
}

static Scalar parse_scalar(std::uint32_t characteristic, const std::string& token) {
  try {
    if (characteristic == 0) {
      const auto slash = token.find('/');
      if (slash == std::string::npos) return Scalar::rational(Rational(boost::multiprecision::cpp_int(token)));
      const boost::multiprecision::cpp_int num(token.substr(0, slash));
      const boost::multiprecision::cpp_int den(token.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in \"" + token + "\"");
      return Scalar::rational(Rational(num, den));
    }
    std::size_t pos = 0;
    const long long v = std::stoll(token, &pos);
    if (pos != token.size()) throw ParseError("trailing characters in \"" + token + "\"");
    return Scalar::residue(characteristic, v);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad coefficient \"" + token + "\"");
  }
}

Polynomial Polynomial::parse(std::uint32_t characteristic, std::string_view text) {
  validate_characteristic(characteristic);
  std::istringstream in{std::string(text)};
  std::vector<Scalar> coeffs;
  std::string token;
  while (in >> token) coeffs.push_back(parse_scalar(characteristic, token));
  if (coeffs.empty()) throw ParseError("empty polynomial text");
  return Polynomial(characteristic, std::move(coeffs));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

std::string Polynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar c = coeff(static_cast<unsigned>(i));
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += c.str();
    } else {
      if (!c.is_one()) out += c.str() + " ";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// differentiation and integration

Polynomial poly_derivative(const Polynomial& p) {
  const std::uint32_t c = p.characteristic();
  if (p.degree() < 1) return Polynomial(c);
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()), Scalar::zero(c));
  for (int i = 1; i <= p.degree(); ++i)
    out[static_cast<std::size_t>(i) - 1] = Scalar::from_integer(c, i) * p.coeff(i);
  return Polynomial(c, std::move(out));
}

static std::optional<int> first_obstruction(const Polynomial& p) {
  const std::uint32_t c = p.characteristic();
  if (c == 0) return std::nullopt;
  for (int i = 0; i <= p.degree(); ++i)
    if (static_cast<std::uint32_t>(i) % c == c - 1 && !p.coeff(i).is_zero()) return i;
  return std::nullopt;
}

bool is_integrable(const Polynomial& p) { return !first_obstruction(p).has_value(); }

bool ConstantSpace::contains(const Polynomial& q) const {
  if (q.characteristic() != characteristic) return false;
  if (characteristic == 0) return q.degree() <= 0;
  for (int i = 0; i <= q.degree(); ++i)
    if (static_cast<std::uint32_t>(i) % characteristic != 0 && !q.coeff(i).is_zero())
      return false;
  return true;
}

std::vector<unsigned> ConstantSpace::basis_exponents() const {
  if (characteristic == 0) return {0};
  std::vector<unsigned> out;
  for (unsigned e = 0; e <= degree_bound; e += characteristic) out.push_back(e);
  return out;
}

std::string ConstantSpace::describe() const {
  if (characteristic == 0) return "F";
  std::string out = "span{";
  bool first = true;
  for (unsigned e : basis_exponents()) {
    if (!first) out += ", ";
    out += e == 0 ? "1" : (e == 1 ? "x" : "x^" + std::to_string(e));
    first = false;
  }
  return out + ", ...}";
}

ConstantSpace constants_description(std::uint32_t characteristic, unsigned degree_bound) {
  validate_characteristic(characteristic);
  return {characteristic, degree_bound};
}

IntegralDescription poly_integrate(const Polynomial& p, unsigned space_degree_bound) {
  if (auto bad = first_obstruction(p))
    throw NotIntegrable("no antiderivative: nonzero coefficient at index " + std::to_string(*bad),
                        *bad);
  const std::uint32_t c = p.characteristic();
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree() + 2), Scalar::zero(c));
  for (int i = 0; i <= p.degree(); ++i) {
    const Scalar ai = p.coeff(static_cast<unsigned>(i));
    if (ai.is_zero()) continue;
    // i+1 is a unit here: an obstruction index would have been caught above
    out[static_cast<std::size_t>(i) + 1] = ai * Scalar::from_integer(c, i + 1).inverse();
  }
  Polynomial particular(c, std::move(out));
  detail::internal_check(poly_derivative(particular) == p,
                         "termwise antiderivative fails to differentiate back");
  return {std::move(particular), constants_description(c, space_degree_bound)};
}

// ---------------------------------------------------------------------------
// bounded solving of d(q) = p

const Polynomial& AntiderivativeFamily::particular() const {
  if (empty_) throw std::logic_error("empty antiderivative family has no particular solution");
  return particular_;
}

unsigned long long AntiderivativeFamily::size() const {
  if (empty_) return 0;
  if (char_ == 0) throw CapacityExceeded("family over the rationals is infinite");
  unsigned long long n = 1;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    if (n > (1ull << 62) / char_) throw CapacityExceeded("family too large to enumerate");
    n *= char_;
  }
  return n;
}

std::vector<Polynomial> AntiderivativeFamily::enumerate() const {
  if (empty_) return {};
  const unsigned long long total = size();
  if (total > (1ull << 22)) throw CapacityExceeded("family too large to enumerate");
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(total));
  for (unsigned long long counter = 0; counter < total; ++counter) {
    Polynomial q = particular_;
    unsigned long long rest = counter;
    for (unsigned e : free_) {
      const long long digit = static_cast<long long>(rest % char_);
      rest /= char_;
      if (digit != 0)
        q = q + Polynomial::monomial(char_, Scalar::residue(char_, digit), e);
    }
    out.push_back(std::move(q));
  }
  return out;
}

bool AntiderivativeFamily::contains(const Polynomial& q) const {
  if (empty_ || q.characteristic() != char_) return false;
  if (q.degree() > static_cast<int>(bound_)) return false;
  const Polynomial diff = q + particular_.scaled(Scalar::one(char_).negate());
  // the difference must be supported on the free exponents
  for (int i = 0; i <= diff.degree(); ++i) {
    if (diff.coeff(static_cast<unsigned>(i)).is_zero()) continue;
    bool free_exponent = false;
    for (unsigned e : free_)
      if (e == static_cast<unsigned>(i)) free_exponent = true;
    if (!free_exponent) return false;
  }
  return true;
}

AntiderivativeFamily bounded_integral_set(const Polynomial& p, unsigned degree_bound) {
  if (static_cast<int>(degree_bound) < p.degree() + 1)
    throw BoundTooSmall("degree bound " + std::to_string(degree_bound) +
                        " < deg(p)+1 = " + std::to_string(p.degree() + 1));
  const std::uint32_t c = p.characteristic();
  AntiderivativeFamily fam(c, degree_bound);

  // d(q) = p fixes each coefficient of q independently: j*q_j = p_(j-1).
  std::vector<Scalar> q(degree_bound + 1, Scalar::zero(c));
  std::vector<unsigned> free_exponents{0};
  for (unsigned j = 1; j <= degree_bound; ++j) {
    const Scalar jj = Scalar::from_integer(c, j);
    const Scalar target = p.coeff(j - 1);
    if (jj.is_zero()) {
      if (!target.is_zero()) return fam;  // 0*q_j = nonzero: unsolvable
      free_exponents.push_back(j);
    } else {
      q[j] = target / jj;
    }
  }
  fam.empty_ = false;
  fam.particular_ = Polynomial(c, std::move(q));
  fam.free_ = std::move(free_exponents);
  return fam;
}

PolyClosureResult closure_condition(std::uint32_t characteristic, unsigned degree_bound) {
  validate_characteristic(characteristic);
  const std::uint32_t p = characteristic;
  if (p >= 3 && degree_bound < p)
    throw BoundTooSmall("degree bound " + std::to_string(degree_bound) +
                        " cannot reach the witness product degree " + std::to_string(p - 1));
  auto integrable_exp = [&](unsigned e) { return p == 0 || e % p != p - 1; };
  for (unsigned i = 0; i <= degree_bound; ++i) {
    if (!integrable_exp(i)) continue;
    for (unsigned j = 0; j <= degree_bound; ++j) {
      if (!integrable_exp(j)) continue;
      if (!integrable_exp(i + j))
        return {false,
                std::make_pair(Polynomial::monomial(p, Scalar::one(p), i),
                               Polynomial::monomial(p, Scalar::one(p), j))};
    }
  }
  return {};
}

}  // namespace semint
