#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "witt/variant.hpp"

namespace witt {

enum class Law { Jacobi, Antisymmetry, Bilinearity, Closure, Cartan };

std::string_view to_string(Law law);
std::optional<Law> parse_law(std::string_view name);

bool antisymmetric(const WittElement& x, const WittElement& y);
bool jacobi(const WittElement& x, const WittElement& y, const WittElement& z);
bool bilinear(const Scalar& a, const WittElement& x, const Scalar& b, const WittElement& y, const WittElement& z);
/// [h, x] = (h, β)·x for x = c·t^β d.
bool cartan_eigen(const CartanElement& h, const WittElement& x);

struct LawReport {
  Law law = Law::Jacobi;
  std::size_t checked = 0;
  std::size_t passed = 0;
  /// Index of the first failing sample.
  std::optional<std::size_t> first_failure;
  bool pass() const { return passed == checked; }
};

/// Checks the law on `count` samples drawn deterministically from `seed`.
LawReport check_law(Law law, const AlgebraVariant& v, DegreeBox box, std::size_t count, std::uint64_t seed);

}  // namespace witt
