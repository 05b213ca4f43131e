#pragma once

#include <vector>

#include "witt/report.hpp"
#include "witt/space.hpp"

namespace witt {

struct CentralizerResult {
  std::vector<WittElement> basis;
  std::size_t dimension = 0;
};

/// {x in the box slice of v : [x, z] = 0 in the full algebra}, as the
/// canonical kernel basis of ad_matrix. Throws ArityMismatch.
CentralizerResult centralizer_basis(const WittElement& z, const AlgebraVariant& v, DegreeBox box);

/// Σ_{β∈K_n} t^β (t₁^k+⋯+t_n^k)d_μ and Σ_{β∈K_n} t^β 𝔥′_n for the shifts β
/// with |β_j| ≤ shift_bound, where K_n = {β : β₁=⋯=β_n=0} and 𝔥′_n is spanned
/// by d_{n+1},…,d_m. No box filtering. Throws BadArity, BadK.
std::vector<WittElement> shifted_centralizer_generators(std::size_t n, std::size_t m, int k, int shift_bound);

/// The generators above whose support fits the box. For n = m this is the
/// single element power_sum(k, n, n).
std::vector<WittElement> predicted_centralizer_4_1(std::size_t n, std::size_t m, int k, DegreeBox box);

/// Centralizer of power_sum(k, n, n) in the box of Wn (or another variant
/// with n = m) is one-dimensional and spanned by the probe itself.
/// Throws BadK for k = 0, for k < 1 on WnPlus/WnPlusPlus, or when box < |k|.
VerificationReport verify_lemma_2_2(std::size_t n, int k, int box, VariantKind kind = VariantKind::Wn);

/// Computed centralizer of power_sum(k, n, m) in the box of the truncated
/// W_∞ model equals the span of predicted_centralizer_4_1 (rank equality of
/// each part and of both stacked). Throws BadArity unless n < m, BadK.
VerificationReport verify_lemma_4_1(std::size_t n, std::size_t m, int k, int box);

/// Stacks elements as rows of coordinates against a shared row index.
std::vector<ScalarVector> coordinate_rows(std::span<const WittElement> elements, RowIndex& rows);

}  // namespace witt
