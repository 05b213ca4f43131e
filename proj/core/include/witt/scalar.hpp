#pragma once

#include <string>

#include "witt/polynomial.hpp"

namespace witt {

/// Element of the rational function field ℚ(μ₁,…,μ_k) in canonical form:
/// gcd(num, den) = 1 and den has coprime integer coefficients with a positive
/// leading coefficient. Equality is structural.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long value) : num_(value), den_(1) {}            // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(MuPolynomial value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// μ_{index+1}.
  static Scalar mu(std::size_t index) { return Scalar(MuPolynomial::variable(index)); }
  /// num / den in canonical form. Throws DivisionByZero when den = 0.
  static Scalar fraction(MuPolynomial num, MuPolynomial den);

  const MuPolynomial& numerator() const { return num_; }
  const MuPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  std::size_t variable_bound() const { return std::max(num_.variable_bound(), den_.variable_bound()); }
  /// Number of stored terms in numerator and denominator; a size proxy.
  std::size_t weight() const { return num_.term_count() + den_.term_count(); }

  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Scalar(MuPolynomial num, MuPolynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}

  MuPolynomial num_;
  MuPolynomial den_;
};

enum class ArithOp { Add, Sub, Mul, Div, Neg };

/// Dispatching form of the field operations; Neg ignores b.
Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b = Scalar());

inline bool scalar_is_zero(const Scalar& a) { return a.is_zero(); }

/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_string(const Scalar& s);

}  // namespace witt
