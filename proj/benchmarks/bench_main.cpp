#include <hermite_kit/expansions.hpp>
#include <hermite_kit/graphs.hpp>
#include <hermite_kit/hermite.hpp>
#include <hermite_kit/quadrature.hpp>
#include <hermite_kit/tensor.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

namespace hk = hermite_kit;

static void BM_HermiteRecurrenceExact(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hk::hermite_recurrence(n));
}
BENCHMARK(BM_HermiteRecurrenceExact)->Arg(12)->Arg(50)->Arg(200);

static void BM_HermiteExplicitExact(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hk::hermite_explicit(n));
}
BENCHMARK(BM_HermiteExplicitExact)->Arg(12)->Arg(50)->Arg(200);

static void BM_EvalHermiteFunction(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hk::eval_hermite_function(n, x));
    x = x > 10.0 ? -10.0 : x + 0.01;
  }
}
BENCHMARK(BM_EvalHermiteFunction)->Arg(10)->Arg(100)->Arg(1000);

static void BM_GaussHermiteRule(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hk::gauss_hermite_rule(n));
}
BENCHMARK(BM_GaussHermiteRule)->Arg(20)->Arg(72)->Arg(200);

static void BM_FourierHermiteCoeffs(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto phi = [](double x) { return std::exp(-0.5 * (x - 0.5) * (x - 0.5)); };
  for (auto _ : state) benchmark::DoNotOptimize(hk::fourier_hermite_coeffs(phi, n));
}
BENCHMARK(BM_FourierHermiteCoeffs)->Arg(30)->Arg(90);

static void BM_MatchingPolynomialComplete(benchmark::State& state) {
  const auto g = hk::complete_graph(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hk::matching_polynomial(g));
}
BENCHMARK(BM_MatchingPolynomialComplete)->DenseRange(8, 20, 4);

static void BM_CompleteMatchesRecurrence(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const hk::PartSizes parts{n, n, n, n};
  for (auto _ : state) benchmark::DoNotOptimize(hk::count_complete_matches(parts));
}
BENCHMARK(BM_CompleteMatchesRecurrence)->Arg(3)->Arg(6)->Arg(10);

static void BM_HermiteTensors(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const std::vector<double> x(d, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(hk::hermite_tensors(4, x));
}
BENCHMARK(BM_HermiteTensors)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
