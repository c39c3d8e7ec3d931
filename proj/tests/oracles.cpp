#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rigidcay::oracle {

namespace {

struct CycleScan {
  const SimpleGraph& graph;
  const EdgeColoring& coloring;
  std::vector<std::vector<std::pair<int, int>>> adjacency;  // (neighbor, edge index)
  std::vector<char> on_path;
  std::vector<int> path;       // vertices
  std::vector<int> path_edges; // edge indices
  bool found_almost = false;

  explicit CycleScan(const SimpleGraph& g, const EdgeColoring& c)
      : graph(g), coloring(c), adjacency(g.vertex_count), on_path(g.vertex_count, 0) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      adjacency[g.edges[i].first].push_back({g.edges[i].second, static_cast<int>(i)});
      adjacency[g.edges[i].second].push_back({g.edges[i].first, static_cast<int>(i)});
    }
  }

  void check_cycle(int closing_edge) {
    int blue = 0, total = 0;
    auto tally = [&](int e) {
      ++total;
      if (coloring.colors[e] == EdgeColor::Blue) ++blue;
    };
    for (int e : path_edges) tally(e);
    tally(closing_edge);
    if (blue == 1 || blue == total - 1) found_almost = true;
  }

  void dfs(int v, int start) {
    for (const auto& [w, e] : adjacency[v]) {
      if (found_almost) return;
      if (w == start && path.size() >= 3 && e != path_edges.front()) {
        // canonical direction so each cycle is seen once
        if (path[1] < v) check_cycle(e);
        continue;
      }
      if (w <= start || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      path_edges.push_back(e);
      dfs(w, start);
      path_edges.pop_back();
      path.pop_back();
      on_path[w] = 0;
    }
  }

  bool has_almost_monochromatic_cycle() {
    for (int start = 0; start < graph.vertex_count && !found_almost; ++start) {
      on_path[start] = 1;
      path = {start};
      for (const auto& [w, e] : adjacency[start]) {
        if (w < start) continue;
        on_path[w] = 1;
        path.push_back(w);
        path_edges.push_back(e);
        dfs(w, start);
        path_edges.pop_back();
        path.pop_back();
        on_path[w] = 0;
        if (found_almost) break;
      }
      on_path[start] = 0;
    }
    return found_almost;
  }
};

std::vector<char> color_reachable(const SimpleGraph& graph, const EdgeColoring& coloring,
                                  EdgeColor color, int from) {
  std::vector<char> seen(graph.vertex_count, 0);
  seen[from] = 1;
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      if (coloring.colors[i] != color) continue;
      const auto& [a, b] = graph.edges[i];
      int w = -1;
      if (a == v) w = b;
      if (b == v) w = a;
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool sparse_subset_ok(const SimpleGraph& graph, const std::vector<int>& chosen) {
  const int n = graph.vertex_count;
  for (int mask = 0; mask < (1 << n); ++mask) {
    const int pc = __builtin_popcount(static_cast<unsigned>(mask));
    if (pc < 2) continue;
    int inside = 0;
    for (int e : chosen) {
      const auto& [u, v] = graph.edges[e];
      if ((mask >> u & 1) && (mask >> v & 1)) ++inside;
    }
    if (inside > 2 * pc - 3) return false;
  }
  return true;
}

}  // namespace

bool cycle_is_nac(const SimpleGraph& graph, const EdgeColoring& coloring) {
  std::size_t blue = 0;
  for (EdgeColor c : coloring.colors)
    if (c == EdgeColor::Blue) ++blue;
  if (blue == 0 || blue == coloring.colors.size()) return false;
  CycleScan scan(graph, coloring);
  return !scan.has_almost_monochromatic_cycle();
}

bool dual_path_is_good(const SimpleGraph& graph, const EdgeColoring& coloring) {
  if (!cycle_is_nac(graph, coloring)) return false;
  for (int u = 0; u < graph.vertex_count; ++u) {
    const auto red = color_reachable(graph, coloring, EdgeColor::Red, u);
    const auto blue = color_reachable(graph, coloring, EdgeColor::Blue, u);
    for (int v = u + 1; v < graph.vertex_count; ++v)
      if (red[v] && blue[v]) return false;
  }
  return true;
}

ComponentPartition bfs_components(const SimpleGraph& graph,
                                  const std::vector<bool>& keep_edge) {
  ComponentPartition partition;
  partition.component_of.assign(graph.vertex_count, -1);
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (partition.component_of[v] >= 0) continue;
    const int index = partition.component_count++;
    std::vector<int> queue{v};
    partition.component_of[v] = index;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        if (!keep_edge[i]) continue;
        const auto& [a, b] = graph.edges[i];
        int w = -1;
        if (a == x) w = b;
        if (b == x) w = a;
        if (w >= 0 && partition.component_of[w] < 0) {
          partition.component_of[w] = index;
          queue.push_back(w);
        }
      }
    }
  }
  return partition;
}

int sparse23_rank_greedy(const SimpleGraph& graph) {
  const int n = graph.vertex_count;
  if (n > 16) throw std::invalid_argument("greedy sparse oracle capped at 16 vertices");
  std::vector<int> inside(1 << n, 0);
  int rank = 0;
  for (const auto& [u, v] : graph.edges) {
    const unsigned both = (1u << u) | (1u << v);
    const unsigned others = ((1u << n) - 1) & ~both;
    bool ok = true;
    for (unsigned rest = others;; rest = (rest - 1) & others) {
      const unsigned mask = rest | both;
      const int pc = __builtin_popcount(mask);
      if (inside[mask] + 1 > 2 * pc - 3) {
        ok = false;
        break;
      }
      if (rest == 0) break;
    }
    if (!ok) continue;
    for (unsigned rest = others;; rest = (rest - 1) & others) {
      ++inside[rest | both];
      if (rest == 0) break;
    }
    ++rank;
  }
  return rank;
}

int sparse23_rank_exhaustive(const SimpleGraph& graph) {
  const int m = static_cast<int>(graph.edges.size());
  if (m > 16) throw std::invalid_argument("exhaustive sparse oracle capped at 16 edges");
  int best = 0;
  for (int subset = 0; subset < (1 << m); ++subset) {
    const int size = __builtin_popcount(static_cast<unsigned>(subset));
    if (size <= best) continue;
    std::vector<int> chosen;
    for (int e = 0; e < m; ++e)
      if (subset >> e & 1) chosen.push_back(e);
    if (sparse_subset_ok(graph, chosen)) best = size;
  }
  return best;
}

long long unpruned_nac_count(const SimpleGraph& graph) {
  const int m = static_cast<int>(graph.edges.size());
  if (m > 20) throw std::invalid_argument("unpruned count capped at 20 edges");
  const int n = graph.vertex_count;
  std::vector<int> red_root(n), blue_root(n);
  auto find = [](std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  long long count = 0;
  for (unsigned bits = 1; bits + 1 < (1u << m); ++bits) {  // skip monochromatic
    for (int v = 0; v < n; ++v) red_root[v] = blue_root[v] = v;
    for (int e = 0; e < m; ++e) {
      auto& parent = (bits >> e & 1) ? blue_root : red_root;
      const int a = find(parent, graph.edges[e].first);
      const int b = find(parent, graph.edges[e].second);
      if (a != b) parent[a] = b;
    }
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      auto& opposite = (bits >> e & 1) ? red_root : blue_root;
      ok = find(opposite, graph.edges[e].first) != find(opposite, graph.edges[e].second);
    }
    if (ok) ++count;
  }
  return count;
}

void for_each_connected_graph(int n, const std::function<void(const SimpleGraph&)>& fn) {
  std::vector<Edge> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  const int m = static_cast<int>(all_pairs.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) edges.push_back(all_pairs[e]);
    SimpleGraph g = make_graph(n, std::move(edges));
    const auto partition = bfs_components(g, std::vector<bool>(g.edges.size(), true));
    if (partition.component_count != 1) continue;
    fn(g);
  }
}

SimpleGraph random_graph(std::mt19937& rng, int max_vertices, double edge_probability,
                         bool require_edge) {
  std::uniform_int_distribution<int> pick_n(3, max_vertices);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    const int n = pick_n(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < edge_probability) edges.emplace_back(u, v);
    if (require_edge && edges.empty()) continue;
    return make_graph(n, std::move(edges));
  }
}

EdgeColoring random_coloring(std::mt19937& rng, std::size_t edge_count) {
  std::uniform_int_distribution<int> coin(0, 1);
  EdgeColoring coloring;
  coloring.colors.reserve(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i)
    coloring.colors.push_back(coin(rng) ? EdgeColor::Blue : EdgeColor::Red);
  return coloring;
}

}  // namespace rigidcay::oracle
