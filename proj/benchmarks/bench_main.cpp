#include <benchmark/benchmark.h>

#include "rigidcay/families.hpp"
#include "rigidcay/flex.hpp"
#include "rigidcay/nac_search.hpp"
#include "rigidcay/rigidity.hpp"

using namespace rigidcay;

namespace {

SimpleGraph z_graph(int n, std::vector<int> gens) {
  return cayley_graph(symmetric_closure(make_generator_set(make_cyclic(n), std::move(gens))));
}

void BM_SearchCountAll_Z12(benchmark::State& state) {
  const auto graph = z_graph(12, {2, 3});
  SearchOptions options;
  options.mode = SearchMode::CountAll;
  for (auto _ : state) {
    auto result = search_nac(graph, options);
    benchmark::DoNotOptimize(result.nac_count);
  }
}
BENCHMARK(BM_SearchCountAll_Z12);

void BM_SearchFirstGood_Prism(benchmark::State& state) {
  const auto graph = z_graph(6, {2, 3});
  SearchOptions options;
  options.mode = SearchMode::FirstGood;
  for (auto _ : state) {
    auto result = search_nac(graph, options);
    benchmark::DoNotOptimize(result.colorings.size());
  }
}
BENCHMARK(BM_SearchFirstGood_Prism);

void BM_PebbleGame_CompleteGraph(benchmark::State& state) {
  const auto graph = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto result = pebble_game_23(graph);
    benchmark::DoNotOptimize(result.rank);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PebbleGame_CompleteGraph)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_SlEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    auto group = make_sl(3, 2);
    benchmark::DoNotOptimize(group.order());
  }
}
BENCHMARK(BM_SlEnumeration);

void BM_FlexVerify_SL3F2(benchmark::State& state) {
  const auto fam = sl_family(3, 2, SlVariant::Elementary);
  for (auto _ : state) {
    auto flex = build_flex(fam.graph, fam.coloring);
    auto report = verify_flex(flex, fam.graph, 32, 1e-9);
    benchmark::DoNotOptimize(report.passed);
  }
}
BENCHMARK(BM_FlexVerify_SL3F2);

}  // namespace

BENCHMARK_MAIN();
