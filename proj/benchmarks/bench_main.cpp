#include <benchmark/benchmark.h>

#include "bdl/free_group.hpp"
#include "bdl/representations.hpp"
#include "bdl/samples.hpp"
#include "bdl/spectral.hpp"

namespace {

void BM_PolyMultiply(benchmark::State& state) {
  bdl::samples::Rng rng(7);
  const int span = static_cast<int>(state.range(0));
  const bdl::LaurentPoly a = bdl::samples::random_laurent(rng, 2, span, 1000);
  const bdl::LaurentPoly b = bdl::samples::random_laurent(rng, 2, span, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(span);
}
BENCHMARK(BM_PolyMultiply)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_BurauPower(benchmark::State& state) {
  const bdl::LaurentMatrix m = bdl::burau_reduced(bdl::BraidWord(4, {1, -2, 3, 2})).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(bdl::power(m, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BurauPower)->Arg(8)->Arg(32);

void BM_TorusSup(benchmark::State& state) {
  const bdl::LaurentMatrix m = bdl::lkb_matrix(bdl::BraidWord(3, {1, -2})).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(bdl::torus_sup_sr(m, static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_TorusSup)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Zeta1(benchmark::State& state) {
  const bdl::BraidWord beta(3, {1, -2});
  for (auto _ : state) benchmark::DoNotOptimize(bdl::zeta1_trace_data(beta, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Zeta1)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
