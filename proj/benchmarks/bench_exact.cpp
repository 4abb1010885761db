#include <benchmark/benchmark.h>

#include "dimred/matroid.hpp"
#include "dimred/signed_graph.hpp"

using namespace dimred;

static void BM_RankTableBraid(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Arrangement arr = Arrangement::braid(m);
  for (auto _ : state) {
    MatroidView mv(arr);
    benchmark::DoNotOptimize(mv.rank_of(mv.ground_set()));
  }
  state.SetLabel(std::to_string(arr.size()) + " hyperplanes");
}
BENCHMARK(BM_RankTableBraid)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ChiAtZeroBraid(benchmark::State& state) {
  const MatroidView mv(Arrangement::braid(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mv.chi_at_zero());
}
BENCHMARK(BM_ChiAtZeroBraid)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_SafeBaseCount(benchmark::State& state) {
  const MatroidView mv(Arrangement::braid(static_cast<int>(state.range(0))));
  const LinearOrder ord = LinearOrder::random(mv.size(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mv.safe_base_count(mv.ground_set(), ord));
}
BENCHMARK(BM_SafeBaseCount)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_RankTableCyclotomic(benchmark::State& state) {
  const Arrangement arr = Arrangement::dowling(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MatroidView mv(arr);
    benchmark::DoNotOptimize(mv.rank());
  }
}
BENCHMARK(BM_RankTableCyclotomic)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_IsBalanced(benchmark::State& state) {
  std::vector<SignedEdge> es;
  const int n = 6;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j, (i + j) % 2 ? Sign::minus : Sign::plus});
  const SignedGraph g(n, es);
  for (auto _ : state) benchmark::DoNotOptimize(is_balanced(g));
}
BENCHMARK(BM_IsBalanced);
