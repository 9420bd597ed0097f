#include <benchmark/benchmark.h>

#include "dsq/analytic.hpp"
#include "dsq/combinatorics.hpp"
#include "dsq/exact.hpp"
#include "dsq/oracle.hpp"

static void BM_AnalyticXi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dsq::DickeClassConfig cfg{n, n / 2 - 1, 0.6};
  // first call builds the shared binomial table
  benchmark::DoNotOptimize(dsq::binomial_term(1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(dsq::analytic::squeezing_parameter(cfg));
}
BENCHMARK(BM_AnalyticXi)->Arg(12)->Arg(105)->Arg(300);

static void BM_OracleXi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dsq::DickeClassConfig cfg{n, n / 2 - 1, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(dsq::oracle::squeezing_parameter_oracle(cfg));
}
BENCHMARK(BM_OracleXi)->Arg(12)->Arg(105);

static void BM_OracleScan(benchmark::State& state) {
  const dsq::DickeClassConfig cfg{12, 5, 0.6};
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dsq::oracle::squeezing_parameter_scan(cfg, steps));
}
BENCHMARK(BM_OracleScan)->Arg(360)->Arg(3600);

static void BM_FullHilbertState(benchmark::State& state) {
  const dsq::DickeClassConfig cfg{static_cast<int>(state.range(0)), 4, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(dsq::oracle::full_hilbert_state(cfg));
}
BENCHMARK(BM_FullHilbertState)->Arg(8)->Arg(12);

static void BM_ExactBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dsq::binomial(n, n / 2));
}
BENCHMARK(BM_ExactBinomial)->Arg(105)->Arg(1000);

static void BM_ExactMoments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dsq::ExactRational x(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dsq::exact::moments(n, n / 2, x));
}
BENCHMARK(BM_ExactMoments)->Arg(10)->Arg(105)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
