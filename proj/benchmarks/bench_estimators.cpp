#include <benchmark/benchmark.h>

#include "dimred/mayer.hpp"
#include "dimred/polymer.hpp"

using namespace dimred;

namespace {

RunOptions opts(std::uint64_t n, int workers) {
  RunOptions o;
  o.n_samples = n;
  o.seed = 1;
  o.workers = workers;
  return o;
}

}  // namespace

static void BM_PressureCoefficient(benchmark::State& state) {
  const MatroidView mv(Arrangement::braid(static_cast<int>(state.range(0))));
  const std::uint64_t n = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(pressure_coefficient(mv, 1, opts(n, 1)).mean);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_PressureCoefficient)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_VolumeMC(benchmark::State& state) {
  const MatroidView mv(Arrangement::braid(static_cast<int>(state.range(0))));
  const int D = static_cast<int>(state.range(1));
  const std::uint64_t n = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(volume_mc(mv, D, {}, opts(n, 1)).mean);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_VolumeMC)->Args({3, 2})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_PressureWorkers(benchmark::State& state) {
  const MatroidView mv(Arrangement::braid(3));
  const std::uint64_t n = 200000;
  for (auto _ : state)
    benchmark::DoNotOptimize(pressure_coefficient(mv, 1, opts(n, static_cast<int>(state.range(0)))).mean);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_PressureWorkers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
