#pragma once

#include <gmpxx.h>

#include <string>

#include "witt/errors.hpp"

namespace witt {

/// Exact rational number; GMP keeps it in lowest terms with a positive
/// denominator once canonicalized.
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1) {
  if (denominator == 0) throw DivisionByZero();
  Rational q{mpz_class(numerator), mpz_class(denominator)};
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace witt
