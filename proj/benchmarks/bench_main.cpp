#include <benchmark/benchmark.h>

#include "support/random.hpp"
#include "tropical/casoratian.hpp"
#include "tropical/linalg.hpp"
#include "tropical/piecewise.hpp"

namespace {

using namespace tropical;

void BM_DeterminantAssignment(benchmark::State& state) {
  testkit::Random rng(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  TropicalMatrix m = rng.matrix(n, n, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(tropical_determinant(m, DeterminantEngine::Assignment));
}
BENCHMARK(BM_DeterminantAssignment)->RangeMultiplier(2)->Range(4, 128);

void BM_DeterminantPermutation(benchmark::State& state) {
  testkit::Random rng(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  TropicalMatrix m = rng.matrix(n, n, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(tropical_determinant(m, DeterminantEngine::Permutation));
}
BENCHMARK(BM_DeterminantPermutation)->DenseRange(3, 9, 2);

void BM_Tmax(benchmark::State& state) {
  testkit::Random rng(3);
  std::size_t k = static_cast<std::size_t>(state.range(0));
  PiecewiseLinear f = rng.function(k), g = rng.function(k);
  for (auto _ : state) benchmark::DoNotOptimize(tmax(f, g));
}
BENCHMARK(BM_Tmax)->RangeMultiplier(4)->Range(4, 256);

void BM_UpperEnvelope(benchmark::State& state) {
  testkit::Random rng(4);
  std::vector<TropicalTerm> lines;
  for (long i = 0; i < state.range(0); ++i) lines.push_back({rng.rational(20, 4), rng.rational(5, 4)});
  for (auto _ : state) benchmark::DoNotOptimize(upper_envelope(lines));
}
BENCHMARK(BM_UpperEnvelope)->RangeMultiplier(4)->Range(4, 1024);

void BM_Casoratian(benchmark::State& state) {
  testkit::Random rng(5);
  CasoratiSpec spec;
  for (long i = 0; i < state.range(0); ++i) spec.functions.push_back(rng.entire(4));
  for (auto _ : state) benchmark::DoNotOptimize(casoratian(spec));
}
BENCHMARK(BM_Casoratian)->DenseRange(2, 5);

}  // namespace
BENCHMARK_MAIN();
