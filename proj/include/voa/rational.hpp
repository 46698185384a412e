#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace voa {

/// Arbitrary-precision exact rational. Every coefficient in the library is one of these.
using Rational = mpq_class;

/// Raised when an algebraic precondition is violated or a computed identity fails.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical rendering: "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

/// Largest integer not exceeding q.
mpz_class floor(const Rational& q);

/// Exact square root if q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace voa
