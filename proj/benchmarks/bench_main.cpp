#include <benchmark/benchmark.h>

#include "boojum/estimator.hpp"
#include "boojum/lattice.hpp"
#include "boojum/params.hpp"

namespace {

void BM_log_conv_exp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  boojum::LogWeights a(n + 1), b(n + 1);
  for (int i = 0; i <= n; ++i) {
    a[i] = -0.01 * i;
    b[i] = -0.02 * i;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(boojum::log_conv_exp(a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_log_conv_exp)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_log_zbar(benchmark::State& state) {
  const boojum::BoojumParams params{1.0, {3.0, 3.0, 3.0}};
  const int grid_n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boojum::log_zbar(params, 2.0, grid_n));
  }
}
BENCHMARK(BM_log_zbar)->Range(128, 1024);

void BM_estimate_log_z_k2(benchmark::State& state) {
  const boojum::BoojumParams params{0.5, {2.0, 4.0}};
  boojum::EstimatorConfig config;
  config.grid_n = 500;
  config.samples_p = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(boojum::estimate_log_z(params, config));
  }
}
BENCHMARK(BM_estimate_log_z_k2)->Arg(100)->Arg(500);

void BM_classify(benchmark::State& state) {
  const boojum::BoojumParams params{1.0, {0.5, 0.9}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(boojum::classify(params));
  }
}
BENCHMARK(BM_classify);

}  // namespace

BENCHMARK_MAIN();
