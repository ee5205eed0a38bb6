#pragma once

#include <stdexcept>
#include <string>

namespace semint {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cayley table has wrong dimensions or an out-of-range entry.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// Derivation map has wrong length or an out-of-range value.
class MalformedMap : public Error {
 public:
  using Error::Error;
};

/// Carrier larger than the brute-force cap.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

/// Elements or derivations of two distinct semiring instances were mixed.
class SemiringMismatch : public Error {
 public:
  using Error::Error;
};

/// A map fails the additivity or Leibniz identity.
class InvalidDerivation : public Error {
 public:
  using Error::Error;
};

/// A rule was invoked on arguments that do not satisfy its preconditions.
class HypothesisUnmet : public Error {
 public:
  using Error::Error;
};

/// The integrable elements are not closed under multiplication, so the
/// integral-set semiring cannot be built.
class ClosureViolated : public Error {
 public:
  using Error::Error;
};

/// Polynomial has no antiderivative; index() names the offending coefficient.
class NotIntegrable : public Error {
 public:
  NotIntegrable(const std::string& what, int index) : Error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// Degree bound too small for the requested probe.
class BoundTooSmall : public Error {
 public:
  using Error::Error;
};

/// Scalars of different characteristics were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (JSON file, polynomial string, derivation spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

/// Always-on invariant check for facts the library itself guarantees
/// (theorem replays, constructed-table sanity). A failure is a bug in this
/// library, never bad input, so it throws logic_error rather than Error.
inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace detail

}  // namespace semint
