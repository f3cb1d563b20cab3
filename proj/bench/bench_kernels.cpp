// Serial reference vs OpenMP kernels: BFS layers and the extremal scan.

#include <benchmark/benchmark.h>

#include "abelcay/cayley.hpp"
#include "abelcay/families.hpp"
#include "abelcay/search.hpp"

using namespace abelcay;

namespace {

CayleyDigraph instance(int which) {
  switch (which) {
    case 0: return make_dnm(4, 4).digraph;   // 32000 vertices
    case 1: return make_dnm(6, 2).digraph;   // 1075648 vertices
    default: return CayleyDigraph(AbelianGroupSpec({2000003}), {{1}, {1414}, {700001}});
  }
}

void bfs(benchmark::State& state, Execution exec) {
  auto g = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(explore(g, exec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.order()));
}

void BM_BfsSerial(benchmark::State& state) { bfs(state, Execution::serial); }
void BM_BfsParallel(benchmark::State& state) { bfs(state, Execution::parallel); }

void search(benchmark::State& state, int threads) {
  SearchOptions o;
  o.threads = threads;
  auto k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(nc_search(3, k, 0, o));
}

void BM_SearchSerial(benchmark::State& state) { search(state, 1); }
void BM_SearchParallel(benchmark::State& state) { search(state, 0); }

}  // namespace

BENCHMARK(BM_BfsSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
