// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rigidcay/conditions.hpp"
#include "rigidcay/families.hpp"
#include "rigidcay/flex.hpp"
#include "rigidcay/io.hpp"
#include "rigidcay/rigidity.hpp"

using namespace rigidcay;

namespace {

struct Checker {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

SimpleGraph z_graph(int n, std::vector<int> gens) {
  return cayley_graph(symmetric_closure(make_generator_set(make_cyclic(n), std::move(gens))));
}

bool regular_of(const SimpleGraph& g, int degree) {
  const auto profile = degree_profile(g);
  return profile.is_regular && !profile.degrees.empty() && profile.degrees[0] == degree;
}

bool flex_passes(const SimpleGraph& graph, const EdgeColoring& coloring, Checker& c,
                 const std::string& tag) {
  auto flex = build_flex(graph, coloring);
  const auto report = verify_flex(flex, graph, 100, 1e-9);
  c.expect(report.lengths_ok, tag + ": edge-length drift " + std::to_string(report.max_edge_drift));
  c.expect(!flex.good || report.injective, tag + ": coincident vertices in some frame");
  c.expect(report.non_congruent, tag + ": all sampled frames congruent");

  const auto a = evaluate(flex, 0.0);
  const auto b = evaluate(flex, std::numbers::pi / 3);
  double best = 0;
  for (std::size_t u = 0; u < a.positions.size(); ++u)
    for (std::size_t v = u + 1; v < a.positions.size(); ++v) {
      const double da = std::hypot(a.positions[u].x - a.positions[v].x,
                                   a.positions[u].y - a.positions[v].y);
      const double db = std::hypot(b.positions[u].x - b.positions[v].x,
                                   b.positions[u].y - b.positions[v].y);
      best = std::max(best, std::abs(da - db));
    }
  c.expect(best > 1e-3, tag + ": frames at 0 and pi/3 nearly congruent");
  return report.passed;
}

void criterion1(Checker& c) {
  const auto group = make_cyclic(6);
  const auto graph = z_graph(6, {2, 3});
  c.expect(graph.vertex_count == 6, "vertex count");
  c.expect(graph.edges.size() == 9, "edge count");
  c.expect(regular_of(graph, 3), "regularity");

  c.expect(check_movable_condition(group, {2, 3}, 2).holds, "movable condition");
  const auto a = subgroup_closure(group, {2});
  const auto b = subgroup_closure(group, {3});
  std::vector<int> meet;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
  c.expect(meet == std::vector<int>{0}, "<2> meets <3> in more than {0}");

  const auto coloring = generator_class_coloring(graph, {2});
  c.expect(is_good_nac(graph, coloring).is_good, "generator coloring not good");
  flex_passes(graph, coloring, c, "Z/6 flex");
}

void criterion2(Checker& c) {
  const auto group = make_cyclic(12);
  const auto graph = z_graph(12, {2, 3});
  c.expect(graph.vertex_count == 12, "vertex count");
  c.expect(graph.edges.size() == 24, "edge count");
  c.expect(regular_of(graph, 4), "regularity");
  c.expect(!laman_count_movable(graph), "edge count 24 should defeat the Laman bound");

  c.expect(check_flexible_condition(group, {2, 3}, 2).holds, "flexible condition");
  const auto coloring = generator_class_coloring(graph, {2});
  const auto verdict = is_good_nac(graph, coloring);
  c.expect(verdict.is_nac, "coloring should be NAC");
  c.expect(!verdict.is_good, "coloring should not be good");
  c.expect(verdict.witness_pair == std::pair<int, int>{0, 6}, "witness pair should be {0,6}");

  const auto movable = check_movable_condition(group, {2, 3}, 2);
  c.expect(!movable.holds, "movable condition should fail");
  c.expect(movable.witnesses == std::vector<int>{6}, "movable witness should be 6");
}

void criterion3(Checker& c) {
  const auto power = abelian_power_family(3, 2);
  c.expect(power.graph.vertex_count == 9 && power.graph.edges.size() == 18 &&
               regular_of(power.graph, 4),
           "(Z/3)^2 counts");

  const auto crt = abelian_crt_family({4, 3});
  c.expect(crt.graph.vertex_count == 12 && crt.graph.edges.size() == 24 &&
               regular_of(crt.graph, 4),
           "Z/4 x Z/3 counts");
  c.expect(crt.translated_generators == std::vector<int>{3, 4, 8, 9},
           "translated generating set");

  const auto odd = abelian_involution_family({2, 3});
  c.expect(regular_of(odd.graph, 3), "Z/2 x Z/3 regularity");

  for (const auto* f : {&power, &crt, &odd})
    c.expect(is_good_nac(f->graph, f->coloring).is_good, f->family_name + " coloring");
}

void criterion4(Checker& c) {
  for (int n : {2, 3, 4, 5}) {
    const auto dense = dense_abelian_family(n, 1);
    const long long vertices = static_cast<long long>(n) * n;
    const long long edges = static_cast<long long>(n) * n * n - n * n;
    c.expect(dense.graph.vertex_count == vertices, "n=" + std::to_string(n) + " vertices");
    c.expect(static_cast<long long>(dense.graph.edges.size()) == edges,
             "n=" + std::to_string(n) + " edges");
    c.expect(regular_of(dense.graph, 2 * n - 2), "n=" + std::to_string(n) + " regularity");

    const auto boxed = cartesian_product(complete_graph(n), complete_graph(n));
    c.expect(dense.graph.edges == boxed.edges,
             "n=" + std::to_string(n) + " differs from K_n box K_n");
    c.expect(is_good_nac(boxed, product_coloring(boxed)).is_good,
             "n=" + std::to_string(n) + " product coloring");
  }
}

void criterion5(Checker& c) {
  for (auto [n, p, expected] : {std::tuple{2, 2, 6LL}, {2, 3, 24LL}, {3, 2, 168LL}}) {
    c.expect(sl_order_formula(n, p) == expected, "order formula");
    c.expect(make_sl(n, p).order() == expected, "enumerated order");
    c.expect(is_generating(elementary_generators(n, p)), "elementary set generates");
  }

  const auto sl32 = make_sl(3, 2);
  const int e12 = sl_transvection(sl32, 0, 1);
  const int e23 = sl_transvection(sl32, 1, 2);
  const int comm = sl32.multiply(sl32.multiply(e12, e23),
                                 sl32.multiply(sl32.invert(e12), sl32.invert(e23)));
  c.expect(comm == sl_transvection(sl32, 0, 2), "commutator [E12,E23] = E13");

  const auto fam = sl_family(2, 3, SlVariant::Elementary);
  c.expect(fam.graph.vertex_count == 24 && fam.graph.edges.size() == 48 &&
               regular_of(fam.graph, 4),
           "SL2(F3) elementary counts");

  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const auto elem = sl_family(n, p, SlVariant::Elementary);
    c.expect(is_good_nac(elem.graph, elem.coloring).is_good, "elementary coloring");
    const auto tri = sl_family(n, p, SlVariant::Triangular);
    long long half = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) half *= p;
    c.expect(regular_of(tri.graph, static_cast<int>(2 * (half - 1))),
             "triangular regularity at n=" + std::to_string(n) + " p=" + std::to_string(p));
    c.expect(is_good_nac(tri.graph, tri.coloring).is_good, "triangular coloring");
  }
}

void criterion6(Checker& c) {
  for (int r : {2, 3, 4, 5}) {
    const auto fam = regularity_construction(r);
    c.expect(regular_of(fam.graph, r), "r=" + std::to_string(r) + " regularity");
    c.expect(is_good_nac(fam.graph, fam.coloring).is_good,
             "r=" + std::to_string(r) + " certificate");
    if (r == 3)
      c.expect(fam.graph.vertex_count == 6, "r=3 should come from Z/2 x Z/3");
    else
      c.expect(fam.graph.vertex_count == (r == 2 ? 6 : 168), "r over F_2 vertex count");
  }
}

void criterion7(Checker& c) {
  for (int n = 2; n <= 5; ++n) {
    SearchOptions count;
    count.mode = SearchMode::CountAll;
    const auto result = search_nac(complete_graph(n), count);
    c.expect(result.complete, "K" + std::to_string(n) + " search incomplete");
    c.expect(result.nac_count == 0, "K" + std::to_string(n) + " has NAC-colorings?");
    c.expect(classify(complete_graph(n)).classification == Classification::Rigid,
             "K" + std::to_string(n) + " not classified Rigid");
  }
}

void criterion8(Checker& c) {
  std::mt19937 rng(20240810);
  long long graphs = 0, coloring_checks = 0, mismatches = 0;

  const auto sweep_graph = [&](const SimpleGraph& g) {
    ++graphs;
    if (pebble_game_23(g).rank != oracle::sparse23_rank_greedy(g)) ++mismatches;
    if (g.edges.empty()) return;

    if (g.edges.size() <= 12) {
      SearchOptions count;
      count.mode = SearchMode::CountAll;
      if (search_nac(g, count).nac_count != oracle::unpruned_nac_count(g)) ++mismatches;
    }

    const std::size_t samples = g.edges.size() <= 4 ? (1u << g.edges.size()) : 8;
    for (std::size_t k = 0; k < samples; ++k) {
      EdgeColoring coloring;
      if (g.edges.size() <= 4) {
        for (std::size_t e = 0; e < g.edges.size(); ++e)
          coloring.colors.push_back(k >> e & 1 ? EdgeColor::Blue : EdgeColor::Red);
      } else {
        coloring = oracle::random_coloring(rng, g.edges.size());
      }
      ++coloring_checks;
      if (is_nac(g, coloring).is_nac != oracle::cycle_is_nac(g, coloring)) ++mismatches;
      if (is_good_nac(g, coloring).is_good != oracle::dual_path_is_good(g, coloring))
        ++mismatches;
    }
  };

  for (int n = 2; n <= 6; ++n) oracle::for_each_connected_graph(n, sweep_graph);
  c.expect(graphs == 1 + 4 + 38 + 728 + 26704, "connected graph census");

  for (int trial = 0; trial < 500; ++trial) {
    const auto g = oracle::random_graph(rng, 8, 0.45, true);
    sweep_graph(g);
  }
  c.expect(mismatches == 0,
           "oracle disagreements: " + std::to_string(mismatches) + " over " +
               std::to_string(graphs) + " graphs / " + std::to_string(coloring_checks) +
               " colorings");
}

void criterion9(Checker& c) {
  long long cases = 0, movable_cases = 0, counterexamples = 0;
  for (int n = 2; n <= 30; ++n) {
    const auto group = make_cyclic(n);
    for (int a = 1; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if ((n - a) % n == b) continue;  // degenerate: S = {s, s^-1}
        const auto gens = symmetric_closure(make_generator_set(group, {a, b}));
        if (!is_generating(gens)) continue;
        const auto graph = cayley_graph(gens);
        for (int s : {a, b}) {
          ++cases;
          const auto coloring = generator_class_coloring(graph, {s});
          if (check_movable_condition(group, {a, b}, s).holds) {
            ++movable_cases;
            if (!is_good_nac(graph, coloring).is_good) ++counterexamples;
          }
          if (check_flexible_condition(group, {a, b}, s).holds)
            if (!is_nac(graph, coloring).is_nac) ++counterexamples;
        }
      }
  }
  c.expect(cases > 1000, "sweep too small: " + std::to_string(cases));
  c.expect(movable_cases > 0, "no movable cases seen");
  c.expect(counterexamples == 0,
           std::to_string(counterexamples) + " counterexamples over " +
               std::to_string(cases) + " cases");
}

void criterion10(Checker& c) {
  std::vector<std::pair<std::string, FamilyInstance>> fixtures;
  fixtures.emplace_back("abelian-power(3,2)", abelian_power_family(3, 2));
  fixtures.emplace_back("abelian-crt(4,3)", abelian_crt_family({4, 3}));
  fixtures.emplace_back("abelian-involution(2,3)", abelian_involution_family({2, 3}));
  for (int n : {2, 3, 4, 5})
    fixtures.emplace_back("dense(" + std::to_string(n) + ",1)", dense_abelian_family(n, 1));
  for (auto [n, p] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    fixtures.emplace_back("sl-elementary(" + std::to_string(n) + "," + std::to_string(p) + ")",
                          sl_family(n, p, SlVariant::Elementary));
    fixtures.emplace_back("sl-triangular(" + std::to_string(n) + "," + std::to_string(p) + ")",
                          sl_family(n, p, SlVariant::Triangular));
  }
  for (int r : {2, 3, 4, 5})
    fixtures.emplace_back("regularity(" + std::to_string(r) + ")", regularity_construction(r));

  const auto prism = z_graph(6, {2, 3});
  flex_passes(prism, generator_class_coloring(prism, {2}), c, "Z/6");
  for (const auto& [tag, fam] : fixtures) flex_passes(fam.graph, fam.coloring, c, tag);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"Z/6 golden fixture: counts, condition, good coloring, flex", criterion1},
      {"Z/12 golden fixture: counts, flexibility, goodness failure witnesses", criterion2},
      {"abelian families: (Z/3)^2, Z/4 x Z/3 with translated set, odd regularity", criterion3},
      {"dense family n=2,3,4,5: counts and product-graph agreement", criterion4},
      {"SL families: orders, generation, commutator, colorings, triangular degrees", criterion5},
      {"regularity sweep r=2..5 with good certificates", criterion6},
      {"rigid baselines: K2..K5 have no NAC-coloring", criterion7},
      {"oracle equivalences on <=6-vertex census plus 500 random graphs", criterion8},
      {"intersection-condition soundness sweep over cyclic groups <= 30", criterion9},
      {"flex numerics on every good-coloring fixture", criterion10},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker checker;
    criteria[i].second(checker);
    const bool ok = checker.failures.empty();
    std::printf("[%s] criterion %zu: %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str());
    if (!ok) {
      ++failed;
      for (std::size_t k = 0; k < checker.failures.size() && k < 5; ++k)
        std::printf("       - %s\n", checker.failures[k].c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
