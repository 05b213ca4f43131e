#include <gtest/gtest.h>

#include "printers.hpp"

#include "oracle.hpp"
#include "witt/errors.hpp"
#include "witt/format.hpp"
#include "witt/number_field.hpp"
#include "witt/parse.hpp"
#include "witt/rigidity.hpp"

using namespace witt;

namespace {

WittElement el(const std::string& text, std::size_t m) { return parse_element(text, m, m); }

// Δ(x) = [a, x] on the required probes plus the extra elements.
PointwiseMap inner_table(const AlgebraVariant& v, const WittElement& a, const std::vector<WittElement>& extra) {
  PointwiseMap delta(v);
  const auto [p0, p1] = required_probes(v);
  delta.set(p0, bracket(a, p0));
  delta.set(p1, bracket(a, p1));
  for (const auto& x : extra) delta.set(x, bracket(a, x));
  return delta;
}

void expect_recovers(const RigidityReport& r, const PointwiseMap& delta) {
  ASSERT_EQ(r.verdict, "agrees");
  ASSERT_TRUE(r.recovered_a.has_value());
  for (const auto& [x, dx] : delta.entries()) {
    // Agreement up to the common centralizer, which is zero here.
    EXPECT_EQ(bracket(*r.recovered_a, x), dx) << to_string(x);
  }
}

}  // namespace

TEST(Leibniz, IdentityFailsOnD1T1D1) {
  const TruncatedSpace space(AlgebraVariant::make(VariantKind::Wn, 1), DegreeBox{2});
  const auto id = LinearMapOnSpace::identity(space);
  const std::pair<WittElement, WittElement> pairs[] = {{el("d1", 1), el("t1*d1", 1)}};
  const LeibnizReport r = leibniz_check(id, pairs);
  EXPECT_EQ(r.failed, 1u);
  EXPECT_FALSE(r.pass());
}

TEST(Leibniz, InnerAndZeroMapsPass) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const TruncatedSpace space(v, DegreeBox{2});
  const WittElement a = el("t1*d2 + (mu1)*d1", 2);
  std::vector<std::pair<WittElement, WittElement>> pairs;
  for (std::uint64_t s = 0; s < 30; ++s) {
    pairs.emplace_back(random_element(v, DegreeBox{1}, 2 * s), random_element(v, DegreeBox{1}, 2 * s + 1));
  }
  for (const auto& d : {LinearMapOnSpace::inner(space, a), LinearMapOnSpace::zero(space)}) {
    const LeibnizReport r = leibniz_check(d, pairs);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.passed + r.unverifiable, pairs.size());
    EXPECT_GT(r.passed, 0u);
  }
}

TEST(Leibniz, OutOfBoxPairsAreUnverifiable) {
  const TruncatedSpace space(AlgebraVariant::make(VariantKind::Wn, 1), DegreeBox{1});
  const auto d = LinearMapOnSpace::zero(space);
  const std::pair<WittElement, WittElement> pairs[] = {{el("t1^3*d1", 1), el("d1", 1)}};
  const LeibnizReport r = leibniz_check(d, pairs);
  EXPECT_EQ(r.unverifiable, 1u);
  EXPECT_TRUE(r.pass());
}

TEST(LinearMap, InnerIsAdditive) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const TruncatedSpace space(v, DegreeBox{1});
  const auto d = LinearMapOnSpace::inner(space, el("t2^-1*d1", 2));
  for (std::uint64_t s = 0; s < 20; ++s) {
    const WittElement x = random_element(v, DegreeBox{1}, 3 * s);
    const WittElement y = random_element(v, DegreeBox{1}, 3 * s + 1);
    const Scalar c = random_scalar(3 * s + 2, 2);
    EXPECT_EQ(*d.apply(x + c * y), *d.apply(x) + c * *d.apply(y));
  }
  EXPECT_FALSE(d.apply(el("t1^2*d1", 2)).has_value());
}

TEST(SolveInner, RecoversPlantedElement) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const WittElement a = el("t1*t2^-1*d1 + 3*d2", 2);
  const auto [p0, p1] = required_probes(v);
  const std::pair<WittElement, WittElement> constraints[] = {{p0, bracket(a, p0)}, {p1, bracket(a, p1)}};
  const InnerSolution s = solve_inner(constraints, v, DegreeBox{1});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.dimension(), 0u);
  EXPECT_EQ(s.a, a);
}

TEST(SolveInner, CentralizerDimension) {
  // Only d_μ's centralizer constraint: the solution space is 𝔥.
  const auto v = AlgebraVariant::make(VariantKind::Wn, 3);
  const WittElement p0 = dmu_element(3, 3);
  const std::pair<WittElement, WittElement> constraints[] = {{p0, WittElement(3)}};
  const InnerSolution s = solve_inner(constraints, v, DegreeBox{1});
  ASSERT_TRUE(s.consistent);
  EXPECT_EQ(s.dimension(), 3u);
  EXPECT_TRUE(s.a.is_zero());
}

TEST(SolveInner, InconsistentCarriesCertificate) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const WittElement p0 = dmu_element(2, 2);
  // [a, d_μ] never has a component at exponent 0.
  const std::pair<WittElement, WittElement> constraints[] = {{p0, el("d1", 2)}};
  const InnerSolution s = solve_inner(constraints, v, DegreeBox{1});
  ASSERT_FALSE(s.consistent);
  ASSERT_FALSE(s.certificate.empty());
  bool hits = false;
  for (const auto& e : s.certificate) hits = hits || (e.exponent.is_zero() && e.direction == 0);
  EXPECT_TRUE(hits);
}

TEST(SolveInner, Errors) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  EXPECT_THROW(solve_inner({}, v, DegreeBox{1}), Error);
  const std::pair<WittElement, WittElement> bad[] = {{dmu_element(3, 3), WittElement(3)}};
  EXPECT_THROW(solve_inner(bad, v, DegreeBox{1}), ArityMismatch);
}

TEST(Verify32, CartanSolutions) {
  for (const char* text : {"t1*d1 + t2^-1*d2", "t1^2*t2*d2", "d1 + t1*t2*d2"}) {
    const auto r = verify_lemma_3_2(el(text, 2), DegreeBox{1});
    EXPECT_TRUE(r.pass) << text;
    EXPECT_EQ(r.dimension, 2u);
  }
}

TEST(Obstruction, MatchesNumericBracket) {
  const std::vector<oracle::Q> mu = {oracle::Q(2), oracle::Q(-7), oracle::Q(5, 3)};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k : {-2, -1, 2, 3, 4}) {
      const auto b = oracle::bracket(oracle::power_sum(1, n, n, mu), oracle::power_sum(k, n, n, mu));
      std::vector<int> alpha(n, 0);
      alpha[0] = k + 1;
      // The t₁^{k+1} component is a multiple of d_μ; read it off the first direction.
      const auto it = b.find({alpha, 0});
      const oracle::Q value = it == b.end() ? oracle::Q(0) : it->second / mu[0];
      EXPECT_EQ(scalar_eval(obstruction_coefficient(n, k), std::span(mu.data(), n)), value) << n << " " << k;
    }
  }
}

TEST(Obstruction, GenericValue) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k : {2, 3}) EXPECT_EQ(obstruction_coefficient(n, k), Scalar(k - 1) * Scalar::mu(0));
  }
  EXPECT_EQ(obstruction_coefficient(1, -1), Scalar(-2) * Scalar::mu(0));
  EXPECT_EQ(obstruction_coefficient(2, -1), Scalar(-2) * (Scalar::mu(0) + Scalar::mu(1)));
  EXPECT_TRUE(obstruction_coefficient(2, 1).is_zero());
}

TEST(Verify33, PassesAndRejectsTrivialK) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int k : {-2, -1, 2, 3}) EXPECT_TRUE(verify_lemma_3_3(n, k).pass) << n << " " << k;
  }
  EXPECT_THROW(verify_lemma_3_3(2, 0), BadK);
  EXPECT_THROW(verify_lemma_3_3(2, 1), BadK);
}

TEST(Verify34, RandomElements) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const WittElement x = random_element(v, DegreeBox{2}, 40 + s);
    if (x.is_zero()) continue;
    const auto r = verify_lemma_3_4(x);
    EXPECT_TRUE(r.pass) << to_string(x);
    EXPECT_TRUE(r.details.contains("violating_term")) << to_string(x);
  }
  EXPECT_FALSE(verify_lemma_3_4(WittElement(2)).pass);
}

TEST(Verify43, SmallCases) {
  EXPECT_TRUE(verify_lemma_4_3(1, 2, 2, 1).pass);
  EXPECT_TRUE(verify_lemma_4_3(2, 3, -1, 1).pass);
  EXPECT_THROW(verify_lemma_4_3(2, 2, 2, 1), BadArity);
}

TEST(Verify44, SliceElements) {
  EXPECT_TRUE(verify_lemma_4_4(el("t1*t2^-1*d1 + d2", 3), 2, 1).pass);
  EXPECT_FALSE(verify_lemma_4_4(el("t3*d1", 3), 2, 1).pass);
}

TEST(Pipeline, RoundTripInW2) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const WittElement a = random_element(v, DegreeBox{1}, 900 + s);
    const PointwiseMap delta = inner_table(v, a, {el("t1*d2", 2), random_element(v, DegreeBox{1}, 950 + s)});
    const RigidityReport r = rigidity_pipeline(delta, DegreeBox{1});
    expect_recovers(r, delta);
    EXPECT_EQ(*r.recovered_a, a);
    EXPECT_TRUE(r.common_centralizer.empty());
  }
}

TEST(Pipeline, ZeroMap) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const PointwiseMap delta = inner_table(v, WittElement(2), {el("t1^2*d1", 2)});
  const RigidityReport r = rigidity_pipeline(delta, DegreeBox{2});
  expect_recovers(r, delta);
  EXPECT_TRUE(r.recovered_a->is_zero());
}

TEST(Pipeline, InconsistentTable) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  PointwiseMap delta = inner_table(v, WittElement(2), {});
  delta.set(dmu_element(2, 2), el("d2", 2));
  const RigidityReport r = rigidity_pipeline(delta, DegreeBox{1});
  EXPECT_EQ(r.verdict, "inconsistent");
  EXPECT_FALSE(r.certificate.empty());
  EXPECT_FALSE(r.pass());
}

TEST(Pipeline, ResidualMismatch) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const WittElement a = el("t1*d1", 2);
  PointwiseMap delta = inner_table(v, a, {});
  const WittElement x = el("t2*d1", 2);
  delta.set(x, bracket(a, x) + el("t1^3*d2", 2));
  const RigidityReport r = rigidity_pipeline(delta, DegreeBox{1});
  EXPECT_EQ(r.verdict, "residual-mismatch");
  bool found = false;
  for (const auto& res : r.residuals) {
    if (res.probe == x) {
      found = true;
      EXPECT_FALSE(res.pass);
      EXPECT_EQ(res.value, el("t1^3*d2", 2));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Pipeline, MissingProbe) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  PointwiseMap delta(v);
  delta.set(dmu_element(2, 2), WittElement(2));
  EXPECT_THROW(rigidity_pipeline(delta, DegreeBox{1}), MissingProbe);
}

TEST(Pipeline, TracesFollowProbeKinds) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const PointwiseMap delta = inner_table(v, el("d1", 2), {power_sum(2, 2, 2), el("t1*t2*d1", 2)});
  const RigidityReport r = rigidity_pipeline(delta, DegreeBox{2});
  ASSERT_EQ(r.lemma_traces.size(), 2u);
  EXPECT_EQ(r.lemma_traces[0].lemma, "lemma3.3");
  EXPECT_EQ(r.lemma_traces[1].lemma, "lemma3.4");
  for (const auto& t : r.lemma_traces) EXPECT_TRUE(t.pass);
  EXPECT_TRUE(rigidity_pipeline(delta, DegreeBox{2}, false).lemma_traces.empty());
}

TEST(Pipeline, OtherVariants) {
  for (auto kind : {VariantKind::WnMu, VariantKind::WnPlusPlus, VariantKind::WnPlus}) {
    const auto v = AlgebraVariant::make(kind, 2);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const WittElement a = random_element(v, DegreeBox{1}, 70 + s);
      const PointwiseMap delta = inner_table(v, a, {random_element(v, DegreeBox{1}, 80 + s)});
      expect_recovers(rigidity_pipeline(delta, DegreeBox{1}), delta);
    }
  }
}

TEST(Pipeline, WnMuTableAlsoAgreesInWn) {
  // Restriction compatibility: a table produced inside W_n(μ) is an inner
  // table of W_n too, and both runs see the same values on every probe.
  const auto mu_variant = AlgebraVariant::make(VariantKind::WnMu, 2);
  const auto full = AlgebraVariant::make(VariantKind::Wn, 2);
  for (std::uint64_t s = 0; s < 3; ++s) {
    const WittElement a = random_element(mu_variant, DegreeBox{1}, 120 + s);
    const std::vector<WittElement> extra = {random_element(mu_variant, DegreeBox{1}, 130 + s)};
    const PointwiseMap small = inner_table(mu_variant, a, extra);
    PointwiseMap large(full);
    for (const auto& [x, dx] : small.entries()) large.set(x, dx);
    const RigidityReport rs = rigidity_pipeline(small, DegreeBox{1});
    const RigidityReport rl = rigidity_pipeline(large, DegreeBox{1});
    expect_recovers(rs, small);
    expect_recovers(rl, large);
    for (const auto& [x, dx] : small.entries()) {
      EXPECT_EQ(bracket(*rs.recovered_a, x), bracket(*rl.recovered_a, x));
    }
  }
}

TEST(Pipeline, TruncatedModel) {
  const auto v = AlgebraVariant::make(VariantKind::WInfTrunc, 3, 2);
  const WittElement a = el("t3*d3 + t1*d2", 3);
  const PointwiseMap delta = inner_table(v, a, {el("t1*t2^-1*d1", 3)});
  const RigidityReport r = rigidity_pipeline(delta, DegreeBox{1});
  ASSERT_NE(r.verdict, "inconsistent");
  // t^β h′ elements commute with both probes, so a is recovered only modulo
  // the common centralizer; every residual must still be realizable.
  for (const auto& res : r.residuals) EXPECT_TRUE(res.pass) << to_string(res.probe);
  EXPECT_EQ(r.verdict, "agrees");
  EXPECT_FALSE(r.common_centralizer.empty());
}
