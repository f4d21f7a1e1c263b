#include <benchmark/benchmark.h>

#include "entrobounds/bounds.hpp"
#include "entrobounds/entropy.hpp"
#include "entrobounds/matrix.hpp"
#include "entrobounds/random.hpp"
#include "entrobounds/scenarios.hpp"

using namespace entrobounds;

static void BM_Eigh(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(11);
  Matrix g = ginibre(rng, d);
  Matrix h = g + g.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(eigh(h));
}
BENCHMARK(BM_Eigh)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_Subentropy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(12);
  DensityMatrix rho = random_density(rng, d);
  for (auto _ : state) benchmark::DoNotOptimize(subentropy(rho));
}
BENCHMARK(BM_Subentropy)->Arg(2)->Arg(4)->Arg(8);

static void BM_FullReportExampleB(benchmark::State& state) {
  Scenario s = two_level_example_b(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(s.ensemble, s.instrument));
}
BENCHMARK(BM_FullReportExampleB);

static void BM_FullReportRandom(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Scenario s = random_scenario(99, d, 3, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(s.ensemble, s.instrument));
}
BENCHMARK(BM_FullReportRandom)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
