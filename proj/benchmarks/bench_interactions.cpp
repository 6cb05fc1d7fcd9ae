#include <benchmark/benchmark.h>

#include "ism/init.hpp"
#include "ism/integrators.hpp"
#include "ism/interactions.hpp"

using namespace ism;

namespace {

Ensemble cloud(std::size_t N, const KernelSpec& k) {
  ModelParams p;
  p.N = N;
  p.J = 1.0;
  Rng rng(12345);
  // Keep the mean neighbor count roughly fixed as N grows.
  const double box = std::cbrt(static_cast<double>(N) / 10.0);
  return uniform_sphere(p, k, box, 1.0, rng);
}

void BM_Distance(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto k = RadialProfile::indicator(1.0);
  const auto e = cloud(N, KernelSpec::distance(k, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(w_distance(e, k, 0.5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Distance)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_Rank(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto t = RadialProfile::smooth_bump(0.5);
  const auto e = cloud(N, KernelSpec::rank(t));
  for (auto _ : state) benchmark::DoNotOptimize(w_rank(e, t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(4)->Range(64, 2048)->Complexity();

void BM_StrangStep(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  auto e = cloud(N, KernelSpec::distance(RadialProfile::indicator(1.0), 0.0));
  for (auto _ : state) benchmark::DoNotOptimize(step_deterministic(e, 1e-3));
}
BENCHMARK(BM_StrangStep)->RangeMultiplier(4)->Range(64, 4096);

void BM_FreeSpaceStep(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  auto e = cloud(N, KernelSpec::constant());
  for (auto _ : state) benchmark::DoNotOptimize(step_free_space(e, 1e-2));
}
BENCHMARK(BM_FreeSpaceStep)->RangeMultiplier(8)->Range(64, 32768);

}  // namespace

BENCHMARK_MAIN();
