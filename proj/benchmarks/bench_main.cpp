#include <benchmark/benchmark.h>

#include "coxcfg/builders.hpp"
#include "coxcfg/isomorphism.hpp"
#include "coxcfg/miquel.hpp"
#include "coxcfg/realization.hpp"
#include "coxcfg/symmetry.hpp"

using namespace coxcfg;

static void BM_Cox(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cox(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Cox)->DenseRange(4, 10, 2);

static void BM_Gras2CoxIsomorphism(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto a = gras2cox(n);
  auto b = cox(n);
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_Gras2CoxIsomorphism)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_MiquelStrong(benchmark::State& state) {
  auto s = cox(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_miquel(s, MiquelVariant::Strong));
}
BENCHMARK(BM_MiquelStrong)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

static void BM_Realize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(realize(n));
}
BENCHMARK(BM_Realize)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  auto r = realize(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify(r));
}
BENCHMARK(BM_Verify)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_BruteForceAutomorphisms(benchmark::State& state) {
  auto s = cox(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_automorphisms(s));
}
BENCHMARK(BM_BruteForceAutomorphisms)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
