#include "witt/number_field.hpp"

#include <algorithm>

#include "witt/errors.hpp"

namespace witt {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense multiply(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by a nonzero b.
std::pair<Dense, Dense> divide(Dense a, const Dense& b) {
  trim(a);
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return {q, a};
}

Dense subtract(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

NumberField::NumberField(std::vector<Rational> minimal_polynomial) {
  trim(minimal_polynomial);
  if (minimal_polynomial.size() < 2) throw Error("minimal polynomial must have degree at least 1");
  Rational lead = minimal_polynomial.back();
  for (auto& c : minimal_polynomial) c /= lead;
  modulus_ = std::make_shared<const Dense>(std::move(minimal_polynomial));
}

AlgebraicNumber NumberField::element(std::vector<Rational> coeffs) const {
  trim(coeffs);
  if (coeffs.size() >= modulus_->size()) coeffs = divide(coeffs, *modulus_).second;
  return AlgebraicNumber(modulus_, std::move(coeffs));
}

AlgebraicNumber NumberField::rational(const Rational& q) const { return element({q}); }

AlgebraicNumber NumberField::generator_power(unsigned k) const {
  Dense x(k + 1);
  x[k] = 1;
  return element(std::move(x));
}

std::vector<AlgebraicNumber> NumberField::power_vector(std::size_t n) const {
  std::vector<AlgebraicNumber> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(generator_power(static_cast<unsigned>(i)));
  return out;
}

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const std::vector<Rational>> modulus,
                                 std::vector<Rational> coeffs)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

bool AlgebraicNumber::is_zero() const { return coeffs_.empty(); }

std::optional<Rational> AlgebraicNumber::as_rational() const {
  if (coeffs_.empty()) return Rational(0);
  if (coeffs_.size() == 1) return coeffs_.front();
  return std::nullopt;
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& rhs) const {
  Dense out = coeffs_;
  if (out.size() < rhs.coeffs_.size()) out.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  trim(out);
  return AlgebraicNumber(modulus_, std::move(out));
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& rhs) const {
  return AlgebraicNumber(modulus_, subtract(coeffs_, rhs.coeffs_));
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& rhs) const {
  Dense prod = multiply(coeffs_, rhs.coeffs_);
  if (prod.size() >= modulus_->size()) prod = divide(prod, *modulus_).second;
  return AlgebraicNumber(modulus_, std::move(prod));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid: track s with s·self ≡ r (mod f).
  Dense r0 = *modulus_, r1 = coeffs_;
  Dense s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divide(r0, r1);
    Dense s = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error("minimal polynomial is reducible");
  for (auto& c : s1) c /= r1.front();
  if (s1.size() >= modulus_->size()) s1 = divide(s1, *modulus_).second;
  return AlgebraicNumber(modulus_, std::move(s1));
}

AlgebraicNumber AlgebraicNumber::constant(const Rational& q) const {
  std::vector<Rational> c;
  if (sgn(q) != 0) c.push_back(q);
  return AlgebraicNumber(modulus_, std::move(c));
}

namespace {

template <typename Value, typename Lift>
Value evaluate_polynomial(const MuPolynomial& p, std::span<const Value> values, Lift&& lift) {
  if (p.variable_bound() > values.size()) {
    throw ArityMismatch("scalar mentions mu" + std::to_string(p.variable_bound()) + " but only " +
                        std::to_string(values.size()) + " values were supplied");
  }
  Value total = lift(Rational(0));
  for (const auto& [m, c] : p.terms()) {
    Value term = lift(c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (unsigned e = 0; e < m.exponent(i); ++e) term = term * values[i];
    }
    total = total + term;
  }
  return total;
}

}  // namespace

Rational scalar_eval(const Scalar& a, std::span<const Rational> mu_values) {
  auto lift = [](const Rational& q) { return q; };
  Rational num = evaluate_polynomial<Rational>(a.numerator(), mu_values, lift);
  Rational den = evaluate_polynomial<Rational>(a.denominator(), mu_values, lift);
  if (sgn(den) == 0) throw DenominatorVanishes();
  return num / den;
}

AlgebraicNumber scalar_eval(const Scalar& a, std::span<const AlgebraicNumber> mu_values) {
  if (mu_values.empty()) throw ArityMismatch("numeric evaluation needs at least one mu value");
  const AlgebraicNumber& sample = mu_values.front();
  auto lift = [&](const Rational& q) { return sample.constant(q); };
  AlgebraicNumber num = evaluate_polynomial<AlgebraicNumber>(a.numerator(), mu_values, lift);
  AlgebraicNumber den = evaluate_polynomial<AlgebraicNumber>(a.denominator(), mu_values, lift);
  if (den.is_zero()) throw DenominatorVanishes();
  return num * den.inverse();
}

}  // namespace witt
