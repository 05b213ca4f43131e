#include "witt/centralizer.hpp"

#include <cstdlib>
#include <stdexcept>

#include "witt/errors.hpp"
#include "witt/format.hpp"

namespace witt {

CentralizerResult centralizer_basis(const WittElement& z, const AlgebraVariant& v, DegreeBox box) {
  const TruncatedSpace space(v, box);
  const AdMatrix ad = ad_matrix(z, space);
  CentralizerResult out;
  for (const auto& vec : kernel(ad.matrix).vectors) {
    WittElement x = space.element_from(vec);
    // Recomputed straight from the bracket, independently of the matrix.
    if (!bracket(x, z).is_zero()) throw std::logic_error("centralizer element fails [x, z] = 0");
    out.basis.push_back(std::move(x));
  }
  out.dimension = out.basis.size();
  return out;
}

std::vector<ScalarVector> coordinate_rows(std::span<const WittElement> elements, RowIndex& rows) {
  for (const auto& e : elements) rows.cover(e);
  std::vector<ScalarVector> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(*rows.coordinates(e));
  return out;
}

std::vector<WittElement> shifted_centralizer_generators(std::size_t n, std::size_t m, int k, int shift_bound) {
  if (n == 0 || n > m) throw BadArity("need 1 <= n <= m");
  if (k == 0) throw BadK("k must be nonzero");
  const WittElement probe = power_sum(k, n, m);
  if (n == m) return {probe};
  std::vector<WittElement> shifts;
  std::vector<WittElement> cartan;
  // Odometer over the last m − n coordinates of β.
  std::vector<int> tail(m - n, -shift_bound);
  while (true) {
    std::vector<int> e(n, 0);
    e.insert(e.end(), tail.begin(), tail.end());
    const Exponent beta(std::move(e));
    shifts.push_back(probe.shifted(beta));
    for (std::size_t j = n; j < m; ++j) cartan.push_back(WittElement::basis(beta, j));
    std::size_t j = tail.size();
    bool done = true;
    while (j > 0) {
      --j;
      if (tail[j] < shift_bound) {
        ++tail[j];
        done = false;
        break;
      }
      tail[j] = -shift_bound;
    }
    if (done) break;
  }
  shifts.insert(shifts.end(), cartan.begin(), cartan.end());
  return shifts;
}

std::vector<WittElement> predicted_centralizer_4_1(std::size_t n, std::size_t m, int k, DegreeBox box) {
  std::vector<WittElement> out;
  for (auto& g : shifted_centralizer_generators(n, m, k, box.bound)) {
    if (g.max_degree() <= box.bound) out.push_back(std::move(g));
  }
  return out;
}

namespace {

void check_k(int k, int box) {
  if (k == 0) throw BadK("k must be nonzero");
  if (box < std::abs(k)) throw BadK("box bound must be at least |k|");
}

}  // namespace

VerificationReport verify_lemma_2_2(std::size_t n, int k, int box, VariantKind kind) {
  check_k(k, box);
  if ((kind == VariantKind::WnPlus || kind == VariantKind::WnPlusPlus) && k < 1) {
    throw BadK("WnPlus and WnPlusPlus probes need k >= 1");
  }
  if (kind == VariantKind::WInfTrunc) throw BadArity("use the truncated W_inf centralizer check for WInfTrunc");
  const AlgebraVariant v = AlgebraVariant::make(kind, n);
  const WittElement z = power_sum(k, n, n);
  const CentralizerResult c = centralizer_basis(z, v, DegreeBox{box});

  VerificationReport r;
  r.lemma = "lemma2.2";
  r.parameters = {{"n", n}, {"k", k}, {"box", box}, {"variant", std::string(to_string(kind))}};
  r.dimension = c.dimension;
  r.basis = c.basis;
  r.details["space_dimension"] = TruncatedSpace(v, DegreeBox{box}).dimension();
  if (c.dimension != 1) r.failures.push_back("centralizer dimension is " + std::to_string(c.dimension) + ", expected 1");
  if (c.dimension == 1) {
    if (auto ratio = proportionality(c.basis.front(), z)) {
      r.details["ratio"] = to_string(*ratio);
    } else {
      r.failures.push_back("basis element is not proportional to the power-sum probe");
    }
  }
  r.pass = r.failures.empty();
  return r;
}

VerificationReport verify_lemma_4_1(std::size_t n, std::size_t m, int k, int box) {
  if (n == 0 || n >= m) throw BadArity("need 1 <= n < m");
  check_k(k, box);
  const AlgebraVariant v = AlgebraVariant::make(VariantKind::WInfTrunc, m, n);
  const WittElement z = power_sum(k, n, m);
  const CentralizerResult c = centralizer_basis(z, v, DegreeBox{box});
  const std::vector<WittElement> predicted = predicted_centralizer_4_1(n, m, k, DegreeBox{box});

  RowIndex rows;
  for (const auto& e : c.basis) rows.cover(e);
  for (const auto& e : predicted) rows.cover(e);
  const auto computed_rows = coordinate_rows(c.basis, rows);
  const auto predicted_rows = coordinate_rows(predicted, rows);
  auto stacked = computed_rows;
  stacked.insert(stacked.end(), predicted_rows.begin(), predicted_rows.end());
  const std::size_t rank_c = rank_of(computed_rows, rows.size());
  const std::size_t rank_p = rank_of(predicted_rows, rows.size());
  const std::size_t rank_s = rank_of(stacked, rows.size());

  VerificationReport r;
  r.lemma = "lemma4.1";
  r.parameters = {{"n", n}, {"m", m}, {"k", k}, {"box", box}};
  r.dimension = c.dimension;
  r.basis = c.basis;
  r.details = {{"computed_rank", rank_c},
               {"predicted_count", predicted.size()},
               {"predicted_rank", rank_p},
               {"stacked_rank", rank_s}};
  for (const auto& p : predicted) {
    if (!bracket(p, z).is_zero()) r.failures.push_back("predicted element does not centralize: " + to_string(p));
  }
  if (rank_p != predicted.size()) r.failures.push_back("predicted elements are dependent");
  if (rank_c != c.dimension) r.failures.push_back("computed basis is dependent");
  if (rank_s != rank_c || rank_s != rank_p) r.failures.push_back("computed and predicted spans differ");
  r.pass = r.failures.empty();
  return r;
}

}  // namespace witt
