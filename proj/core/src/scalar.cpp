#include "witt/scalar.hpp"

#include "witt/errors.hpp"

namespace witt {

namespace {

// Brings num/den with gcd(num, den) = 1 into the canonical denominator scale.
std::pair<MuPolynomial, MuPolynomial> scale_denominator(MuPolynomial num, const MuPolynomial& den) {
  Rational scale;
  MuPolynomial normalized = primitive_part(den, &scale);
  if (scale != 1) num *= Rational(1 / scale);
  return {std::move(num), std::move(normalized)};
}

}  // namespace

Scalar Scalar::fraction(MuPolynomial num, MuPolynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return Scalar();
  if (den.is_constant()) return Scalar(num * Rational(1 / den.constant_value()));
  MuPolynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = *divide_exact(num, g);
    den = *divide_exact(den, g);
  }
  if (den.is_constant()) return Scalar(num * Rational(1 / den.constant_value()));
  auto [n, d] = scale_denominator(std::move(num), den);
  return Scalar(std::move(n), std::move(d), 0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return fraction(den_, num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_one()) {
      num_ += rhs.num_;
      return *this;
    }
    return *this = fraction(num_ + rhs.num_, den_);
  }
  MuPolynomial g = gcd(den_, rhs.den_);
  MuPolynomial lhs_cofactor = *divide_exact(rhs.den_, g);
  MuPolynomial rhs_cofactor = *divide_exact(den_, g);
  MuPolynomial num = num_ * lhs_cofactor + rhs.num_ * rhs_cofactor;
  return *this = fraction(std::move(num), den_ * lhs_cofactor);
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Scalar();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  // Cross-cancel first so the product is already reduced.
  MuPolynomial g1 = gcd(num_, rhs.den_);
  MuPolynomial g2 = gcd(rhs.num_, den_);
  MuPolynomial num = *divide_exact(num_, g1) * *divide_exact(rhs.num_, g2);
  MuPolynomial den = *divide_exact(den_, g2) * *divide_exact(rhs.den_, g1);
  if (den.is_constant()) return *this = Scalar(num * Rational(1 / den.constant_value()));
  auto [n, d] = scale_denominator(std::move(num), den);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Neg: return -a;
  }
  return {};
}

std::string to_string(const Scalar& s) {
  if (s.is_polynomial()) return to_string(s.numerator());
  return "(" + to_string(s.numerator()) + ")/(" + to_string(s.denominator()) + ")";
}

}  // namespace witt
