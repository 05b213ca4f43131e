#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "witt/scalar.hpp"

namespace witt {

/// Integer vector α ∈ ℤ^m indexing the Laurent monomial t^α. Ordered
/// lexicographically.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t length) : entries_(length, 0) {}
  explicit Exponent(std::vector<int> entries) : entries_(std::move(entries)) {}
  Exponent(std::initializer_list<int> entries) : entries_(entries) {}

  /// scale·ε_{index+1}.
  static Exponent unit(std::size_t length, std::size_t index, int scale = 1);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  bool is_zero() const;
  int max_abs() const;

  Exponent operator+(const Exponent& rhs) const;
  Exponent operator-(const Exponent& rhs) const;
  Exponent operator-() const;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  std::vector<int> entries_;
};

/// c₁d₁+⋯+c_m d_m, an element of the Cartan subalgebra 𝔥.
class CartanElement {
 public:
  CartanElement() = default;
  explicit CartanElement(std::size_t m) : coeffs_(m) {}
  explicit CartanElement(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

  /// d_{index+1}.
  static CartanElement basis(std::size_t m, std::size_t index);

  std::size_t size() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  CartanElement& operator+=(const CartanElement& rhs);
  CartanElement& operator-=(const CartanElement& rhs);
  CartanElement& operator*=(const Scalar& c);
  friend CartanElement operator+(CartanElement a, const CartanElement& b) { return a += b; }
  friend CartanElement operator-(CartanElement a, const CartanElement& b) { return a -= b; }
  friend CartanElement operator*(const Scalar& c, CartanElement a) { return a *= c; }
  friend bool operator==(const CartanElement&, const CartanElement&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

/// (d, β) = Σ c_i β_i. Throws LengthMismatch on differing lengths.
Scalar pairing(const CartanElement& d, const Exponent& beta);

/// d_μ = μ₁d₁+⋯+μ_n d_n inside an ambient 𝔥 of dimension m ≥ n.
CartanElement dmu(std::size_t m, std::size_t n);
inline CartanElement dmu(std::size_t m) { return dmu(m, m); }

/// Finite sum Σ_{α∈S} t^α d_α in W_m. The support never stores a zero
/// CartanElement, so equality is structural.
class WittElement {
 public:
  using Support = std::map<Exponent, CartanElement>;

  WittElement() = default;
  explicit WittElement(std::size_t m) : ambient_(m) {}

  /// t^α d.
  static WittElement monomial(const Exponent& alpha, const CartanElement& d);
  /// t^α d_{direction+1}.
  static WittElement basis(const Exponent& alpha, std::size_t direction);

  std::size_t ambient() const { return ambient_; }
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t term_count() const { return support_.size(); }
  /// Component at α, or nullptr when α ∉ S.
  const CartanElement* component(const Exponent& alpha) const;
  /// Largest |α_i| over the support; 0 for the zero element.
  int max_degree() const;

  /// Adds t^α d to this element.
  void add_term(const Exponent& alpha, const CartanElement& d);
  void add_term(const Exponent& alpha, CartanElement&& d);

  /// t^β · x.
  WittElement shifted(const Exponent& beta) const;

  WittElement operator-() const;
  WittElement& operator+=(const WittElement& rhs);
  WittElement& operator-=(const WittElement& rhs);
  WittElement& operator*=(const Scalar& c);
  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
  friend WittElement operator*(const Scalar& c, WittElement a) { return a *= c; }
  friend bool operator==(const WittElement&, const WittElement&) = default;

 private:
  std::size_t ambient_ = 0;
  Support support_;
};

/// Lie bracket via [t^α d_α, t^β d_β] = t^{α+β}((d_α,β)d_β − (d_β,α)d_α),
/// extended bilinearly. Throws LengthMismatch on differing ambient arity.
WittElement bracket(const WittElement& x, const WittElement& y);

/// ad(a)x = [a, x].
inline WittElement ad_apply(const WittElement& a, const WittElement& x) { return bracket(a, x); }

/// (t₁^k+⋯+t_n^k)d_μ in W_m. Throws BadArity unless 1 ≤ n ≤ m.
WittElement power_sum(int k, std::size_t n, std::size_t m);

/// d_μ as an element of W_m (support {0}).
WittElement dmu_element(std::size_t m, std::size_t n);

/// x viewed inside W_m for m ≥ x.ambient(): exponents padded with zeros.
/// Throws BadArity when m is smaller.
WittElement extended(const WittElement& x, std::size_t m);

/// c with x = c·y, when it exists and y ≠ 0.
std::optional<Scalar> proportionality(const CartanElement& x, const CartanElement& y);
std::optional<Scalar> proportionality(const WittElement& x, const WittElement& y);

}  // namespace witt
