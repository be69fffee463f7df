#include <benchmark/benchmark.h>

#include <map>

#include "lpcd/copra.hpp"
#include "lpcd/quality.hpp"
#include "lpcd/rak.hpp"
#include "lpcd/slpa.hpp"
#include "lpcd/testkit.hpp"

namespace {

// Average degree ~20, so state.range(0) vertices give ~10x edges.
const lpcd::Graph& Gnp(std::int64_t n) {
  static std::map<std::int64_t, lpcd::Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    const double p = 20.0 / static_cast<double>(n);
    it = cache.emplace(n, lpcd::testkit::gen_graph(lpcd::testkit::gnp(n, p, 1))).first;
  }
  return it->second;
}

void BM_Rak(benchmark::State& state) {
  const auto& g = Gnp(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpcd::rak_detect(g, {.workers = workers}));
  }
  state.SetItemsProcessed(state.iterations() * g.arc_count());
}
BENCHMARK(BM_Rak)->ArgsProduct({{10000, 100000}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);

void BM_Copra(benchmark::State& state) {
  const auto& g = Gnp(state.range(0));
  const int max_labels = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpcd::copra_detect(g, {.max_labels = max_labels}));
  }
}
BENCHMARK(BM_Copra)->ArgsProduct({{10000, 100000}, {1, 8}})->Unit(benchmark::kMillisecond);

void BM_Slpa(benchmark::State& state) {
  const auto& g = Gnp(state.range(0));
  const int memory_size = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpcd::slpa_detect(g, {.memory_size = memory_size}));
  }
}
BENCHMARK(BM_Slpa)->ArgsProduct({{10000, 100000}, {10, 40}})->Unit(benchmark::kMillisecond);

void BM_Modularity(benchmark::State& state) {
  const auto& g = Gnp(state.range(0));
  lpcd::CommunityAssignment a{std::vector<lpcd::VertexId>(g.vertex_count())};
  for (lpcd::VertexId v = 0; v < g.vertex_count(); ++v) a.labels[v] = v / 16;
  for (auto _ : state) benchmark::DoNotOptimize(lpcd::modularity(g, a));
}
BENCHMARK(BM_Modularity)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
