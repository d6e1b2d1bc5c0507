#include <benchmark/benchmark.h>

#include "strata/embedding.hpp"
#include "strata/geometry.hpp"
#include "strata/states.hpp"

using namespace strata;

static void BM_schmidt_decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PureState s = sample_state(n, n + 2, std::nullopt, 1);
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_decompose(s));
}
BENCHMARK(BM_schmidt_decompose)->DenseRange(2, 8, 2);

static void BM_embedding_roundtrip(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const PureState s = sample_state(k + 1, k + 2, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_fidelity(s));
}
BENCHMARK(BM_embedding_roundtrip)->DenseRange(1, 5, 1);

static void BM_certify_stratum(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_stratum_dimension(k + 1, k + 1, k, 3));
}
BENCHMARK(BM_certify_stratum)->DenseRange(1, 4, 1);

static void BM_metric_tensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const ChartPoint pt(n, 1, rng.complex_gaussian_matrix(n - 1, 1).col(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(metric_tensor(pt, MetricMode::fubini_study));
}
BENCHMARK(BM_metric_tensor)->RangeMultiplier(2)->Range(2, 64);

BENCHMARK_MAIN();
