#include "witt/element.hpp"

#include <algorithm>
#include <cstdlib>

#include "witt/errors.hpp"

namespace witt {

// ---------------------------------------------------------------- Exponent

Exponent Exponent::unit(std::size_t length, std::size_t index, int scale) {
  Exponent e(length);
  e.entries_.at(index) = scale;
  return e;
}

bool Exponent::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v == 0; });
}

int Exponent::max_abs() const {
  int m = 0;
  for (int v : entries_) m = std::max(m, std::abs(v));
  return m;
}

Exponent Exponent::operator+(const Exponent& rhs) const {
  if (size() != rhs.size()) throw LengthMismatch("exponent lengths differ");
  Exponent r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.entries_[i] += rhs.entries_[i];
  return r;
}

Exponent Exponent::operator-(const Exponent& rhs) const { return *this + (-rhs); }

Exponent Exponent::operator-() const {
  Exponent r = *this;
  for (int& v : r.entries_) v = -v;
  return r;
}

// ----------------------------------------------------------- CartanElement

CartanElement CartanElement::basis(std::size_t m, std::size_t index) {
  CartanElement d(m);
  d.coeffs_.at(index) = Scalar(1);
  return d;
}

bool CartanElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

CartanElement& CartanElement::operator+=(const CartanElement& rhs) {
  if (size() != rhs.size()) throw LengthMismatch("Cartan element lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CartanElement& CartanElement::operator-=(const CartanElement& rhs) {
  if (size() != rhs.size()) throw LengthMismatch("Cartan element lengths differ");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CartanElement& CartanElement::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Scalar pairing(const CartanElement& d, const Exponent& beta) {
  if (d.size() != beta.size()) throw LengthMismatch("pairing of a Cartan element with an exponent of different length");
  Scalar total;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (beta[i] != 0 && !d[i].is_zero()) total += d[i] * Scalar(beta[i]);
  }
  return total;
}

CartanElement dmu(std::size_t m, std::size_t n) {
  if (n == 0 || n > m) throw BadArity("d_mu needs 1 <= n <= m");
  CartanElement d(m);
  for (std::size_t i = 0; i < n; ++i) d[i] = Scalar::mu(i);
  return d;
}

// ------------------------------------------------------------- WittElement

WittElement WittElement::monomial(const Exponent& alpha, const CartanElement& d) {
  if (alpha.size() != d.size()) throw LengthMismatch("exponent and Cartan element lengths differ");
  WittElement x(alpha.size());
  x.add_term(alpha, d);
  return x;
}

WittElement WittElement::basis(const Exponent& alpha, std::size_t direction) {
  return monomial(alpha, CartanElement::basis(alpha.size(), direction));
}

const CartanElement* WittElement::component(const Exponent& alpha) const {
  auto it = support_.find(alpha);
  return it == support_.end() ? nullptr : &it->second;
}

int WittElement::max_degree() const {
  int m = 0;
  for (const auto& [alpha, d] : support_) m = std::max(m, alpha.max_abs());
  return m;
}

void WittElement::add_term(const Exponent& alpha, const CartanElement& d) {
  add_term(alpha, CartanElement(d));
}

void WittElement::add_term(const Exponent& alpha, CartanElement&& d) {
  if (alpha.size() != ambient_ || d.size() != ambient_) throw LengthMismatch("term arity differs from the element's");
  if (d.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(alpha, std::move(d));
  if (!inserted) {
    it->second += d;
    if (it->second.is_zero()) support_.erase(it);
  }
}

WittElement WittElement::shifted(const Exponent& beta) const {
  WittElement r(ambient_);
  for (const auto& [alpha, d] : support_) r.support_.emplace(alpha + beta, d);
  return r;
}

WittElement WittElement::operator-() const {
  WittElement r = *this;
  for (auto& [alpha, d] : r.support_) d *= Scalar(-1);
  return r;
}

WittElement& WittElement::operator+=(const WittElement& rhs) {
  if (ambient_ != rhs.ambient_) throw LengthMismatch("elements live in different ambient algebras");
  for (const auto& [alpha, d] : rhs.support_) add_term(alpha, d);
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& rhs) { return *this += -rhs; }

WittElement& WittElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    support_.clear();
    return *this;
  }
  for (auto& [alpha, d] : support_) d *= c;
  return *this;
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  if (x.ambient() != y.ambient()) throw LengthMismatch("bracket of elements with different ambient arity");
  const std::size_t m = x.ambient();
  std::map<Exponent, CartanElement> acc;
  for (const auto& [alpha, da] : x.support()) {
    for (const auto& [beta, db] : y.support()) {
      const Scalar da_beta = pairing(da, beta);
      const Scalar db_alpha = pairing(db, alpha);
      if (da_beta.is_zero() && db_alpha.is_zero()) continue;
      auto [it, inserted] = acc.try_emplace(alpha + beta, m);
      CartanElement& slot = it->second;
      for (std::size_t i = 0; i < m; ++i) {
        if (!da_beta.is_zero() && !db[i].is_zero()) slot[i] += da_beta * db[i];
        if (!db_alpha.is_zero() && !da[i].is_zero()) slot[i] -= db_alpha * da[i];
      }
    }
  }
  WittElement out(m);
  for (auto& [gamma, d] : acc) out.add_term(gamma, std::move(d));
  return out;
}

WittElement dmu_element(std::size_t m, std::size_t n) {
  return WittElement::monomial(Exponent(m), dmu(m, n));
}

WittElement power_sum(int k, std::size_t n, std::size_t m) {
  if (n == 0 || n > m) throw BadArity("power_sum needs 1 <= n <= m");
  const CartanElement d = dmu(m, n);
  WittElement out(m);
  for (std::size_t i = 0; i < n; ++i) out.add_term(Exponent::unit(m, i, k), d);
  return out;
}

WittElement extended(const WittElement& x, std::size_t m) {
  if (m < x.ambient()) throw BadArity("cannot shrink the ambient arity");
  WittElement out(m);
  for (const auto& [alpha, d] : x.support()) {
    std::vector<int> e(alpha.entries().begin(), alpha.entries().end());
    e.resize(m, 0);
    std::vector<Scalar> c = d.coefficients();
    c.resize(m);
    out.add_term(Exponent(std::move(e)), CartanElement(std::move(c)));
  }
  return out;
}

std::optional<Scalar> proportionality(const CartanElement& x, const CartanElement& y) {
  if (x.size() != y.size()) return std::nullopt;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) continue;
    Scalar c = x[i] / y[i];
    if (c * y == x) return c;
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Scalar> proportionality(const WittElement& x, const WittElement& y) {
  if (y.is_zero() || x.ambient() != y.ambient()) return std::nullopt;
  if (x.is_zero()) return Scalar();
  const auto& [alpha, dy] = *y.support().begin();
  const CartanElement* dx = x.component(alpha);
  if (dx == nullptr) return std::nullopt;
  auto c = proportionality(*dx, dy);
  if (!c || !(*c * y == x)) return std::nullopt;
  return c;
}

}  // namespace witt
