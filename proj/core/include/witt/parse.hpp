#pragma once

#include <optional>
#include <string_view>

#include "witt/element.hpp"

namespace witt {

/// Scalar grammar: integers, mu1..mu8, + - * / ^ and parentheses.
/// Throws ParseError.
Scalar parse_scalar(std::string_view text);

/// Element of W_arity, e.g. "t1^2*t2^-1*d1 + 3*t2*d2" or "(t1+t2)*dmu".
/// Products distribute; "dmu" is μ₁d₁+⋯+μ_n d_n for n = prefix and is
/// rejected when no prefix is given. Throws ParseError.
WittElement parse_element(std::string_view text, std::size_t arity, std::optional<std::size_t> prefix = std::nullopt);

}  // namespace witt
