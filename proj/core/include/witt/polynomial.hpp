#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

/// Upper bound on the number of μ indeterminates a polynomial may mention.
inline constexpr std::size_t kMaxMuVariables = 8;

/// Power product μ₁^e₁⋯μ_k^e_k. Ordered graded-lexicographically: higher total
/// degree first, ties broken by comparing exponents of μ₁, μ₂, … in turn.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t var) const { return exps_[var]; }
  void set_exponent(std::size_t var, unsigned e);
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  /// 1 + index of the highest variable present; 0 for the unit monomial.
  std::size_t variable_bound() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint16_t, kMaxMuVariables> exps_{};
};

/// Sparse polynomial in ℚ[μ₁,…,μ_k]. Terms are kept sorted in decreasing
/// monomial order with no zero coefficients; the zero polynomial has no terms.
class MuPolynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  MuPolynomial() = default;
  MuPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MuPolynomial(long constant) : MuPolynomial(Rational(constant)) {}  // NOLINT

  static MuPolynomial variable(std::size_t index);
  static MuPolynomial monomial(const Monomial& m, const Rational& c);
  /// Combines like terms, drops zeros and sorts.
  static MuPolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  std::size_t variable_bound() const;
  unsigned degree_in(std::size_t var) const;
  unsigned total_degree() const;
  /// Coefficient of μ^m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  MuPolynomial operator-() const;
  MuPolynomial& operator+=(const MuPolynomial& rhs);
  MuPolynomial& operator-=(const MuPolynomial& rhs);
  MuPolynomial& operator*=(const MuPolynomial& rhs);
  MuPolynomial& operator*=(const Rational& c);

  friend MuPolynomial operator+(MuPolynomial a, const MuPolynomial& b) { return a += b; }
  friend MuPolynomial operator-(MuPolynomial a, const MuPolynomial& b) { return a -= b; }
  friend MuPolynomial operator*(const MuPolynomial& a, const MuPolynomial& b);
  friend MuPolynomial operator*(MuPolynomial a, const Rational& c) { return a *= c; }
  friend MuPolynomial operator*(const Rational& c, MuPolynomial a) { return a *= c; }
  friend bool operator==(const MuPolynomial& a, const MuPolynomial& b) = default;

  /// Multiplies every exponent by the monomial m.
  MuPolynomial shifted(const Monomial& m) const;

 private:
  std::vector<Term> terms_;
};

/// Quotient a / b when b divides a exactly in ℚ[μ]; nullopt otherwise.
std::optional<MuPolynomial> divide_exact(const MuPolynomial& a, const MuPolynomial& b);

/// Writes p = scale · q with q having coprime integer coefficients and a
/// positive leading coefficient. Returns q; zero maps to zero with scale 1.
MuPolynomial primitive_part(const MuPolynomial& p, Rational* scale = nullptr);

/// Greatest common divisor, normalized to content 1 and positive leading
/// coefficient. gcd(0, 0) = 0.
MuPolynomial gcd(const MuPolynomial& a, const MuPolynomial& b);

/// Canonical text: terms in monomial order, e.g. "mu1^2 - 2*mu1*mu2 + 3/2".
std::string to_string(const MuPolynomial& p);
std::string to_string(const Monomial& m);

}  // namespace witt
