#pragma once

#include <memory>
#include <span>
#include <vector>

#include "witt/scalar.hpp"

namespace witt {

class AlgebraicNumber;

/// ℚ(ζ) = ℚ[x]/(f) for an irreducible f, given by its coefficients from the
/// constant term upward. Used to evaluate Scalars at numeric generic vectors
/// such as μ = (ζ, ζ², …, ζⁿ).
class NumberField {
 public:
  explicit NumberField(std::vector<Rational> minimal_polynomial);

  std::size_t degree() const { return modulus_->size() - 1; }
  AlgebraicNumber element(std::vector<Rational> coeffs) const;
  AlgebraicNumber rational(const Rational& q) const;
  /// ζ^k for k ≥ 0.
  AlgebraicNumber generator_power(unsigned k) const;
  /// (ζ, ζ², …, ζⁿ).
  std::vector<AlgebraicNumber> power_vector(std::size_t n) const;

 private:
  std::shared_ptr<const std::vector<Rational>> modulus_;  // monic
};

/// Element of a NumberField, stored as a reduced polynomial in ζ.
class AlgebraicNumber {
 public:
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  /// q embedded in the same field.
  AlgebraicNumber constant(const Rational& q) const;
  /// The value when it lies in ℚ.
  std::optional<Rational> as_rational() const;

  AlgebraicNumber operator+(const AlgebraicNumber& rhs) const;
  AlgebraicNumber operator-(const AlgebraicNumber& rhs) const;
  AlgebraicNumber operator*(const AlgebraicNumber& rhs) const;
  /// Throws DivisionByZero for zero.
  AlgebraicNumber inverse() const;
  bool operator==(const AlgebraicNumber& rhs) const { return coeffs_ == rhs.coeffs_; }

 private:
  friend class NumberField;
  AlgebraicNumber(std::shared_ptr<const std::vector<Rational>> modulus, std::vector<Rational> coeffs);

  std::shared_ptr<const std::vector<Rational>> modulus_;
  std::vector<Rational> coeffs_;
};

/// Exact value of a at rational μ. Throws ArityMismatch when the scalar
/// mentions a μ beyond mu_values, DenominatorVanishes at a pole.
Rational scalar_eval(const Scalar& a, std::span<const Rational> mu_values);
/// Same, with μ taking values in a number field.
AlgebraicNumber scalar_eval(const Scalar& a, std::span<const AlgebraicNumber> mu_values);

}  // namespace witt
