#include <benchmark/benchmark.h>

#include "witt/centralizer.hpp"
#include "witt/rigidity.hpp"

using namespace witt;

namespace {

MuPolynomial linear_form(long a, long b, long c) {
  return MuPolynomial(Rational(a)) * MuPolynomial::variable(0) + MuPolynomial(Rational(b)) * MuPolynomial::variable(1) +
         MuPolynomial(Rational(c));
}

void BM_PolynomialGcd(benchmark::State& state) {
  // Products of linear forms sharing a planted common factor.
  const int factors = static_cast<int>(state.range(0));
  MuPolynomial common(1);
  MuPolynomial a(1);
  MuPolynomial b(1);
  for (int i = 0; i < factors; ++i) {
    common *= linear_form(i + 1, 2 * i - 3, 5 - i);
    a *= linear_form(3 * i + 2, -i, 1);
    b *= linear_form(i - 4, i + 1, -2 * i);
  }
  a *= common;
  b *= common;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd)->DenseRange(1, 4);

void BM_Bracket(benchmark::State& state) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 3);
  const WittElement x = random_element(v, DegreeBox{3}, 1, RandomOptions{static_cast<std::size_t>(state.range(0)), 4, 30});
  const WittElement y = random_element(v, DegreeBox{3}, 2, RandomOptions{static_cast<std::size_t>(state.range(0)), 4, 30});
  for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_Bracket)->Arg(3)->Arg(10)->Arg(30);

void BM_PowerSumCentralizer(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const auto v = AlgebraVariant::make(VariantKind::Wn, n);
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_basis(power_sum(k, n, n), v, DegreeBox{std::abs(k) + 2}));
}
BENCHMARK(BM_PowerSumCentralizer)->Args({2, 2})->Args({2, 4})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_RigidityPipeline(benchmark::State& state) {
  const auto v = AlgebraVariant::make(VariantKind::Wn, 2);
  const DegreeBox box{static_cast<int>(state.range(0))};
  const WittElement a = random_element(v, box, 11);
  PointwiseMap delta(v);
  const auto [p0, p1] = required_probes(v);
  for (const auto& x : {p0, p1, power_sum(2, 2, 2), random_element(v, box, 12)}) delta.set(x, bracket(a, x));
  for (auto _ : state) benchmark::DoNotOptimize(rigidity_pipeline(delta, box, false));
}
BENCHMARK(BM_RigidityPipeline)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
