// Serial reference vs OpenMP grid evaluation on a figure preset.
#include <benchmark/benchmark.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "uqfi/sweep.hpp"

namespace {

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = uqfi::figure_spec("1b", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(uqfi::run_sweep_serial(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_SweepOpenMP(benchmark::State& state) {
  const auto spec = uqfi::figure_spec("1b", static_cast<int>(state.range(0)));
#ifdef _OPENMP
  omp_set_num_threads(static_cast<int>(state.range(1)));
#endif
  for (auto _ : state) benchmark::DoNotOptimize(uqfi::run_sweep(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_SweepFiniteDifference(benchmark::State& state) {
  auto spec = uqfi::figure_spec("6b", static_cast<int>(state.range(0)));
  spec.method = uqfi::DerivativeMethod::central();
  for (auto _ : state) benchmark::DoNotOptimize(uqfi::run_sweep(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)
    ->ArgsProduct({{64, 256}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SweepFiniteDifference)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
