#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/report.hpp"
#include "witt/space.hpp"

namespace witt {

/// Finite table of probe values Δ(x), kept in insertion order.
class PointwiseMap {
 public:
  explicit PointwiseMap(const AlgebraVariant& variant) : variant_(variant) {}

  const AlgebraVariant& variant() const { return variant_; }
  const std::vector<std::pair<WittElement, WittElement>>& entries() const { return entries_; }
  /// Sets Δ(x) = value, replacing an earlier entry for x.
  void set(const WittElement& x, const WittElement& value);
  const WittElement* find(const WittElement& x) const;

 private:
  AlgebraVariant variant_;
  std::vector<std::pair<WittElement, WittElement>> entries_;
};

/// Linear map known through its values on the basis of a truncated space.
class LinearMapOnSpace {
 public:
  LinearMapOnSpace(TruncatedSpace space, std::vector<WittElement> images);

  static LinearMapOnSpace inner(const TruncatedSpace& space, const WittElement& a);
  static LinearMapOnSpace identity(const TruncatedSpace& space);
  static LinearMapOnSpace zero(const TruncatedSpace& space);

  const TruncatedSpace& space() const { return space_; }
  /// D(x), or nullopt when x is outside the space.
  std::optional<WittElement> apply(const WittElement& x) const;

 private:
  TruncatedSpace space_;
  std::vector<WittElement> images_;
};

enum class PairOutcome { Pass, Fail, Unverifiable };

struct LeibnizReport {
  std::vector<PairOutcome> outcomes;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unverifiable = 0;
  bool pass() const { return failed == 0; }
};

/// D([x,y]) = [D(x),y] + [x,D(y)] for each pair. Pairs where x, y or [x,y]
/// fall outside D's space are reported as unverifiable, not failed.
LeibnizReport leibniz_check(const LinearMapOnSpace& d, std::span<const std::pair<WittElement, WittElement>> pairs);

/// Weight of one equation in an inconsistency certificate: the equation
/// reads "coefficient of t^exponent d_direction in [a, x_constraint]".
struct CertificateEntry {
  std::size_t constraint = 0;
  Exponent exponent;
  std::size_t direction = 0;
  Scalar weight;
};

struct InnerSolution {
  bool consistent = false;
  /// Particular solution with free coordinates set to zero.
  WittElement a;
  /// Basis of {a : [a, x_i] = 0 for all i} within the box.
  std::vector<WittElement> homogeneous;
  std::vector<CertificateEntry> certificate;
  std::size_t dimension() const { return homogeneous.size(); }
};

/// Finds a in the box slice of v with [a, x_i] = y_i for every constraint,
/// as one stacked system. Throws ArityMismatch, and Error on no constraints.
InnerSolution solve_inner(std::span<const std::pair<WittElement, WittElement>> constraints, const AlgebraVariant& v,
                          DegreeBox box);

/// Every a with [a, d_μ] = 0 in the box of Wn lies in 𝔥 and maps x into
/// Σ_{α∈S(x)} ℂ t^α d_α.
VerificationReport verify_lemma_3_2(const WittElement& x, DegreeBox box);

/// Coefficient of t₁^{k+1}d_μ in [(t₁+⋯+t_n)d_μ, (t₁^k+⋯+t_n^k)d_μ].
Scalar obstruction_coefficient(std::size_t n, int k);

/// [c(t₁+⋯+t_n)d_μ, (t₁^k+⋯+t_n^k)d_μ] has the obstruction coefficient
/// c(k−1)μ₁ and lying in Σ ℂ t_i^k d_μ forces c = 0. Throws BadK for k ∈ {0,1}.
VerificationReport verify_lemma_3_3(std::size_t n, int k);

/// With n_x = 1 + max |α_i| and k = 2n_x + 1, [c(t₁^k+⋯+t_n^k)d_μ, x] lying
/// in Σ_{α∈S(x)} ℂ t^α d_α forces c = 0. n defaults to x's arity.
VerificationReport verify_lemma_3_4(const WittElement& x, std::size_t n = 0);

/// Truncated W_∞ analogue of the k-probe obstruction: for a in the computed
/// centralizer of (t₁+⋯+t_n)d_μ (box of size shift_bound), [a, power_sum(k)]
/// lying in Σ_{β∈K_n} Σ_i ℂ t^{kε_i+β} d_μ forces every shift coefficient to
/// zero while the t^β 𝔥′_n part is unconstrained. Throws BadK, BadArity.
VerificationReport verify_lemma_4_3(std::size_t n, std::size_t m, int k, int shift_bound = 2);

/// Truncated W_∞ analogue of the support argument: a ranges over the
/// unclipped shifted generators of the power_sum(k) centralizer.
VerificationReport verify_lemma_4_4(const WittElement& x, std::size_t n, int shift_bound = 2);

struct ResidualCheck {
  WittElement probe;
  /// Δ(probe) − [a, probe].
  WittElement value;
  bool pass = false;
};

struct RigidityReport {
  /// "agrees", "residual-mismatch" or "inconsistent".
  std::string verdict;
  std::optional<WittElement> recovered_a;
  std::vector<WittElement> common_centralizer;
  std::vector<ResidualCheck> residuals;
  std::vector<CertificateEntry> certificate;
  std::vector<VerificationReport> lemma_traces;
  bool pass() const { return verdict == "agrees"; }
};

/// The two probes the pipeline needs: d_μ and (t₁+⋯+t_n)d_μ.
std::pair<WittElement, WittElement> required_probes(const AlgebraVariant& v);

/// Solves for a on the two required probes, then tests every table entry's
/// residual Δ(x) − [a, x] for realizability as [b, x] with b in the probes'
/// common centralizer. Throws MissingProbe.
RigidityReport rigidity_pipeline(const PointwiseMap& delta, DegreeBox box, bool with_traces = true);

}  // namespace witt
