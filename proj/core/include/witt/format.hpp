#pragma once

#include <string>

#include "witt/element.hpp"

namespace witt {

/// "(2, -1)".
std::string to_string(const Exponent& alpha);

/// "mu1*d1 + mu2*d2"; "0" for the zero element.
std::string to_string(const CartanElement& d);

/// Terms in (exponent, direction) order, e.g. "3*t1^2*t2^-1*d1 - (mu1 + 1)*d2".
/// Coefficients that are not a single monomial are parenthesized. The output
/// is accepted by parse_element.
std::string to_string(const WittElement& x);

}  // namespace witt
