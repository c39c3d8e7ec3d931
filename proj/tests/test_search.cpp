#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rigidcay/errors.hpp"
#include "rigidcay/nac_search.hpp"

using namespace rigidcay;

namespace {

SimpleGraph z_graph(int n, std::vector<int> gens) {
  return cayley_graph(symmetric_closure(make_generator_set(make_cyclic(n), std::move(gens))));
}

SearchResult run(const SimpleGraph& g, SearchMode mode, long long budget = 10'000'000) {
  SearchOptions opt;
  opt.mode = mode;
  opt.budget = budget;
  return search_nac(g, opt);
}

}  // namespace

TEST_CASE("counts on small fixtures") {
  CHECK(run(complete_graph(3), SearchMode::CountAll).nac_count == 0);
  CHECK(run(complete_graph(4), SearchMode::CountAll).nac_count == 0);
  CHECK(run(complete_graph(5), SearchMode::CountAll).nac_count == 0);

  // 4-cycle: 14 surjective colorings minus 8 almost-monochromatic ones.
  const auto c4 = cycle_graph(4);
  CHECK(oracle::unpruned_nac_count(c4) == 6);
  CHECK(run(c4, SearchMode::CountAll).nac_count == 6);
}

TEST_CASE("enumerate-all matches count-all and expands the swap symmetry") {
  const auto c4 = cycle_graph(4);
  const auto result = run(c4, SearchMode::EnumerateAll);
  CHECK(result.nac_count == 6);
  CHECK(result.colorings.size() == 6);
  std::set<std::vector<EdgeColor>> unique;
  for (const auto& coloring : result.colorings) {
    CHECK(is_nac(c4, coloring).is_nac);
    unique.insert(coloring.colors);
  }
  CHECK(unique.size() == 6);
  for (const auto& colors : unique) {
    EdgeColoring c{colors};
    CHECK(unique.count(swapped(c).colors) == 1);
  }
}

TEST_CASE("first-any and first-good") {
  const auto prism = z_graph(6, {2, 3});
  const auto any = run(prism, SearchMode::FirstAny);
  REQUIRE(any.colorings.size() == 1);
  CHECK(is_nac(prism, any.colorings[0]).is_nac);

  const auto good = run(prism, SearchMode::FirstGood);
  REQUIRE(good.colorings.size() == 1);
  CHECK(is_good_nac(prism, good.colorings[0]).is_good);

  SUBCASE("the Z/12 graph is flexible but admits no good coloring") {
    const auto g12 = z_graph(12, {2, 3});
    const auto any12 = run(g12, SearchMode::FirstAny);
    CHECK(any12.colorings.size() == 1);
    const auto good12 = run(g12, SearchMode::FirstGood);
    CHECK(good12.complete);
    CHECK(good12.colorings.empty());
    // regression: 140 NAC-colorings in total over all 2^24-2 surjective ones
    CHECK(run(g12, SearchMode::CountAll).nac_count == 140);
  }
}

TEST_CASE("pruned search equals unpruned enumeration") {
  std::mt19937 rng(321);
  int checked = 0;
  while (checked < 60) {
    const auto g = oracle::random_graph(rng, 7, 0.45, true);
    if (g.edges.size() > 12) continue;
    ++checked;
    CHECK(run(g, SearchMode::CountAll).nac_count == oracle::unpruned_nac_count(g));
  }
}

TEST_CASE("budget truncation sets the partial flag") {
  const auto g12 = z_graph(12, {2, 3});
  const auto truncated = run(g12, SearchMode::CountAll, 50);
  CHECK_FALSE(truncated.complete);
  CHECK(truncated.nodes <= 51);
}

TEST_CASE("edge cap on exhaustive modes") {
  const auto k9 = complete_graph(9);  // 36 edges
  CHECK_THROWS_AS(run(k9, SearchMode::CountAll), CapacityExceededError);
  CHECK_THROWS_AS(run(k9, SearchMode::EnumerateAll), CapacityExceededError);
}

TEST_CASE("parallel workers agree with the single-threaded count") {
  SearchOptions parallel;
  parallel.mode = SearchMode::CountAll;
  parallel.workers = 4;
  parallel.split_depth = 5;

  for (const auto& g : {cycle_graph(6), z_graph(12, {2, 3}),
                        cartesian_product(complete_graph(3), complete_graph(3))}) {
    const auto solo = run(g, SearchMode::CountAll);
    const auto multi = search_nac(g, parallel);
    CHECK(solo.nac_count == multi.nac_count);
    CHECK(multi.complete);
  }

  SearchOptions pgood = parallel;
  pgood.mode = SearchMode::FirstGood;
  const auto prism = z_graph(6, {2, 3});
  const auto found = search_nac(prism, pgood);
  REQUIRE(found.colorings.size() == 1);
  CHECK(is_good_nac(prism, found.colorings[0]).is_good);
}

TEST_CASE("degenerate inputs") {
  const auto edgeless = make_graph(4, {});
  const auto result = run(edgeless, SearchMode::CountAll);
  CHECK(result.nac_count == 0);
  CHECK(result.complete);

  const auto single = complete_graph(2);
  CHECK(run(single, SearchMode::CountAll).nac_count == 0);
  CHECK(run(single, SearchMode::FirstAny).colorings.empty());
}
