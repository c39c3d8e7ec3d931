#include "rigidcay/rigidity.hpp"

#include <algorithm>

#include "rigidcay/errors.hpp"

namespace rigidcay {

namespace {

// Directed search for a free pebble reachable from `start`, excluding the
// endpoints of the edge being inserted. On success the path is reversed and
// one pebble moves to `start`.
bool pull_pebble(int start, int exclude_a, int exclude_b, std::vector<int>& pebbles,
                 std::vector<std::vector<int>>& out_edges) {
  const int n = static_cast<int>(pebbles.size());
  std::vector<int> parent(n, -2);
  parent[exclude_a] = -3;
  parent[exclude_b] = -3;
  parent[start] = -1;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : out_edges[v]) {
      if (parent[w] != -2) continue;
      parent[w] = v;
      if (pebbles[w] > 0) {
        // Reverse the path w <- ... <- start.
        int child = w;
        while (parent[child] >= 0) {
          const int from = parent[child];
          auto& list = out_edges[from];
          list.erase(std::find(list.begin(), list.end(), child));
          out_edges[child].push_back(from);
          child = from;
        }
        --pebbles[w];
        ++pebbles[start];
        return true;
      }
      stack.push_back(w);
    }
  }
  return false;
}

}  // namespace

PebbleGameResult pebble_game_23(const SimpleGraph& graph) {
  PebbleGameResult result;
  const int n = graph.vertex_count;
  if (n < 2) return result;
  std::vector<int> pebbles(n, 2);
  std::vector<std::vector<int>> out_edges(n);

  for (const auto& [u, v] : graph.edges) {
    while (pebbles[u] + pebbles[v] < 4) {
      if (!pull_pebble(u, u, v, pebbles, out_edges) &&
          !pull_pebble(v, u, v, pebbles, out_edges))
        break;
    }
    if (pebbles[u] + pebbles[v] >= 4) {
      --pebbles[u];
      out_edges[u].push_back(v);
      result.independent_edges.emplace_back(u, v);
      ++result.rank;
    }
  }
  return result;
}

bool laman_count_movable(const SimpleGraph& graph) {
  if (graph.vertex_count < 1) throw InvalidParameterError("empty graph");
  if (!is_connected(graph))
    throw InvalidInputError("the edge-count criterion presupposes a connected graph");
  return static_cast<long long>(graph.edges.size()) < 2LL * graph.vertex_count - 3;
}

bool is_laman_graph(const SimpleGraph& graph) {
  if (graph.vertex_count < 2) return false;
  const long long target = 2LL * graph.vertex_count - 3;
  if (static_cast<long long>(graph.edges.size()) != target) return false;
  return pebble_game_23(graph).rank == static_cast<int>(graph.edges.size());
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Rigid:
      return "Rigid";
    case Classification::Flexible:
      return "Flexible";
    case Classification::Movable:
      return "Movable";
    case Classification::FlexibleMovabilityUnknown:
      return "FlexibleMovabilityUnknown";
  }
  return "?";
}

RigidityReport classify(const SimpleGraph& graph, const SearchOptions& options) {
  if (graph.edges.empty()) throw InvalidInputError("classification needs at least one edge");
  if (!is_connected(graph)) throw InvalidInputError("classification needs a connected graph");

  RigidityReport report;
  report.laman_count_movable = laman_count_movable(graph);
  const auto pebble = pebble_game_23(graph);
  report.pebble_rank = pebble.rank;
  report.has_spanning_laman = pebble.rank == 2 * graph.vertex_count - 3;

  SearchOptions any = options;
  any.mode = SearchMode::FirstAny;
  const SearchResult any_result = search_nac(graph, any);
  report.partial = !any_result.complete;
  if (!any_result.colorings.empty()) {
    report.nac_exists = true;
    report.nac_certificate = any_result.colorings.front();
  } else if (any_result.complete) {
    report.nac_exists = false;
    report.good_nac_exists = false;
    report.classification = Classification::Rigid;
    return report;
  }

  std::optional<EdgeColoring> good_cert;
  if (report.nac_exists) {
    SearchOptions good = options;
    good.mode = SearchMode::FirstGood;
    const SearchResult good_result = search_nac(graph, good);
    if (!good_result.colorings.empty()) {
      report.good_nac_exists = true;
      good_cert = good_result.colorings.front();
    } else if (good_result.complete) {
      report.good_nac_exists = false;
    } else {
      report.partial = true;
    }
  }

  if (good_cert.has_value()) {
    report.good_nac_certificate = good_cert;
    report.movability_reasons.push_back("good-nac-coloring");
  }
  if (report.laman_count_movable)
    report.movability_reasons.push_back("edge-count |E| < 2|V|-3");
  if (!report.has_spanning_laman)
    report.movability_reasons.push_back("no spanning Laman subgraph (pebble rank " +
                                        std::to_string(pebble.rank) + " < 2|V|-3)");

  if (!report.movability_reasons.empty()) {
    report.classification = Classification::Movable;
  } else if (report.nac_exists && report.good_nac_exists.has_value()) {
    // Good colorings exhaustively absent and both count tests negative:
    // provably flexible, movability open.
    report.classification = Classification::Flexible;
  } else {
    report.classification = Classification::FlexibleMovabilityUnknown;
  }
  return report;
}

}  // namespace rigidcay
