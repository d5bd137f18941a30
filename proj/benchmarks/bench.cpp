#include "heightzeta/arch.hpp"
#include "heightzeta/local.hpp"
#include "heightzeta/points.hpp"
#include "heightzeta/zeta.hpp"

#include <benchmark/benchmark.h>

namespace hz = heightzeta;

static void BM_CountFast(benchmark::State& state) {
  const hz::points::HeightBound bound{hz::Rational(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hz::points::count_fast(bound));
}
BENCHMARK(BM_CountFast)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_NormHistogram(benchmark::State& state) {
  const hz::points::HeightBound bound{hz::Rational(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(hz::points::primitive_norm_counts(bound));
}
BENCHMARK(BM_NormHistogram)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_RiemannZeta(benchmark::State& state) {
  const hz::Complex s(4.5, 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(hz::local::riemann_zeta(s));
}
BENCHMARK(BM_RiemannZeta);

static void BM_FourierIntegral(benchmark::State& state) {
  const double rho = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hz::arch::fourier_height_integral_at(hz::Complex(6.0, 1.0), rho));
}
BENCHMARK(BM_FourierIntegral)->Arg(1)->Arg(5);

static void BM_Z1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hz::zeta::z1(6.0, static_cast<int>(state.range(0))).value);
}
BENCHMARK(BM_Z1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
