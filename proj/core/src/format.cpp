#include "witt/format.hpp"

namespace witt {

namespace {

// Coefficient prefix and sign; a bare ±1 prints nothing.
std::pair<std::string, bool> coefficient_part(const Scalar& c) {
  if (c.is_polynomial() && c.numerator().term_count() == 1) {
    const auto& [mono, q] = c.numerator().leading_term();
    const bool negative = sgn(q) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (magnitude.is_one()) return {"", negative};
    return {to_string(magnitude) + "*", negative};
  }
  return {"(" + to_string(c) + ")*", false};
}

void append_term(std::string& out, const Scalar& c, const std::string& tail) {
  auto [coef, negative] = coefficient_part(c);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  out += coef;
  out += tail;
}

std::string monomial_prefix(const Exponent& alpha) {
  std::string out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    out += "t" + std::to_string(j + 1);
    if (alpha[j] != 1) out += "^" + std::to_string(alpha[j]);
    out += '*';
  }
  return out;
}

}  // namespace

std::string to_string(const Exponent& alpha) {
  std::string out = "(";
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j) out += ", ";
    out += std::to_string(alpha[j]);
  }
  return out + ")";
}

std::string to_string(const CartanElement& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i].is_zero()) append_term(out, d[i], "d" + std::to_string(i + 1));
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const WittElement& x) {
  std::string out;
  for (const auto& [alpha, d] : x.support()) {
    const std::string prefix = monomial_prefix(alpha);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_zero()) append_term(out, d[i], prefix + "d" + std::to_string(i + 1));
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace witt
