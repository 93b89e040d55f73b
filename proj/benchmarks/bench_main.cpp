#include <benchmark/benchmark.h>

#include "matchkit/cotree.hpp"
#include "matchkit/exact_count.hpp"
#include "matchkit/gadgets.hpp"
#include "matchkit/oracle.hpp"
#include "matchkit/transition_graph.hpp"
#include "matchkit/treewidth.hpp"

namespace {

using namespace matchkit;

void BM_OracleEnumerate(benchmark::State& state) {
  Graph g = slow_gk(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(enumerate_perfect_matchings(g, budget));
  }
}
BENCHMARK(BM_OracleEnumerate)->Arg(2)->Arg(3)->Arg(4);

void BM_CographCount(benchmark::State& state) {
  Graph g = slow_gk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_pm_cograph(g));
}
BENCHMARK(BM_CographCount)->Arg(4)->Arg(8)->Arg(12);

void BM_TreewidthCount(benchmark::State& state) {
  Graph g = spiders_web(static_cast<int>(state.range(0)));
  auto nice = make_nice(minfill_td(g));
  for (auto _ : state) benchmark::DoNotOptimize(count_pm_td(g, nice));
}
BENCHMARK(BM_TreewidthCount)->Arg(2)->Arg(3)->Arg(4);

void BM_TransitionGraph(benchmark::State& state) {
  Graph g = spiders_web(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Budget budget;
    benchmark::DoNotOptimize(build_transition_graph(g, budget));
  }
}
BENCHMARK(BM_TransitionGraph)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
