#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "witt/element.hpp"

namespace witt {

enum class VariantKind { Wn, WnPlus, WnPlusPlus, WnMu, WInfTrunc };

std::string_view to_string(VariantKind kind);
std::optional<VariantKind> parse_variant_kind(std::string_view name);

/// Which algebra an element is meant to live in. m is the ambient variable
/// count; n is the number of variables d_μ is built from (n < m only for
/// the truncated W_∞ model).
struct AlgebraVariant {
  VariantKind kind = VariantKind::Wn;
  std::size_t m = 1;
  std::size_t n = 1;

  /// Validates the (kind, m, n) combination; n = 0 means "same as m".
  /// Throws BadArity.
  static AlgebraVariant make(VariantKind kind, std::size_t m, std::size_t n = 0);

  friend bool operator==(const AlgebraVariant&, const AlgebraVariant&) = default;
};

/// True iff every support term lies in the variant's spanning set.
bool member(const AlgebraVariant& v, const WittElement& x);

/// |α_j| ≤ bound for all j, intersected with the variant's exponents.
struct DegreeBox {
  int bound = 0;
};

/// Direction index of d_μ in a BasisSlot.
inline constexpr std::size_t kMuDirection = std::numeric_limits<std::size_t>::max();

/// One basis vector t^α d_i (or t^α d_μ when direction == kMuDirection).
struct BasisSlot {
  Exponent exponent;
  std::size_t direction = 0;

  friend auto operator<=>(const BasisSlot&, const BasisSlot&) = default;
  friend bool operator==(const BasisSlot&, const BasisSlot&) = default;
};

/// Whether t^α d_i (or t^α d_μ) is a basis vector of v inside the box.
bool admits(const AlgebraVariant& v, DegreeBox box, const Exponent& alpha, std::size_t direction);

/// Every admitted slot, sorted by (exponent, direction).
std::vector<BasisSlot> enumerate_slots(const AlgebraVariant& v, DegreeBox box);

/// The element t^α d_i (or t^α d_μ) named by a slot.
WittElement slot_element(const AlgebraVariant& v, const BasisSlot& slot);

struct RandomOptions {
  std::size_t max_terms = 3;
  /// Coefficients are drawn from [-coeff_range, coeff_range] \ {0}.
  int coeff_range = 4;
  /// Probability (in percent) that a coefficient also picks up a μ term.
  int mu_percent = 30;
};

/// Deterministic in seed; support inside the box; member(v, result) holds.
WittElement random_element(const AlgebraVariant& v, DegreeBox box, std::uint64_t seed,
                           const RandomOptions& options = {});

/// Random Scalar for property tests: small polynomial, sometimes a fraction.
Scalar random_scalar(std::uint64_t seed, std::size_t mu_count);

}  // namespace witt
