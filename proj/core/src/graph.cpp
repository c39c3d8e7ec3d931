#include "rigidcay/graph.hpp"

#include <algorithm>
#include <limits>

#include "rigidcay/errors.hpp"
#include "rigidcay/union_find.hpp"

namespace rigidcay {

int SimpleGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return -1;
  return static_cast<int>(it - edges.begin());
}

SimpleGraph make_graph(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw InvalidParameterError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw InvalidInputError("loop edge at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw InvalidInputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  SimpleGraph g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  return g;
}

SimpleGraph complete_graph(int n) {
  if (n < 1) throw InvalidParameterError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InvalidParameterError("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return make_graph(n, std::move(edges));
}

SimpleGraph cayley_graph(const GeneratorSet& gens) {
  const FiniteGroup& group = gens.group;
  if (!group.valid()) throw InvalidParameterError("invalid group");
  for (int s : gens.elements) {
    if (s == group.identity())
      throw InvalidGeneratorError("identity is not allowed in a generating set");
    if (!std::binary_search(gens.elements.begin(), gens.elements.end(), group.invert(s)))
      throw InvalidGeneratorError("generating set is not symmetric: missing inverse of " +
                                  group.element_name(s));
  }

  const int n = group.order();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * gens.elements.size() / 2 + 1);
  for (int x = 0; x < n; ++x)
    for (int s : gens.elements) {
      const int y = group.multiply(s, x);
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  SimpleGraph g = make_graph(n, std::move(edges));

  g.vertex_labels.reserve(n);
  for (int x = 0; x < n; ++x) g.vertex_labels.push_back(group.element_name(x));

  CayleyStructure structure;
  structure.group = group;
  structure.generators = gens.elements;
  structure.generating =
      static_cast<int>(subgroup_closure(group, gens.elements).size()) == n;
  g.cayley = std::move(structure);
  return g;
}

SimpleGraph cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2) {
  const int n1 = g1.vertex_count;
  const int n2 = g2.vertex_count;
  const long long total = static_cast<long long>(n1) * n2;
  if (total > static_cast<long long>(std::numeric_limits<int>::max()))
    throw CapacityExceededError("product vertex count overflows");

  std::vector<std::pair<Edge, EdgeOrigin>> tagged;
  tagged.reserve(g1.edges.size() * n2 + g2.edges.size() * n1);
  for (const auto& [x, y] : g1.edges)
    for (int c = 0; c < n2; ++c)
      tagged.push_back({{x * n2 + c, y * n2 + c}, EdgeOrigin::FirstFactor});
  for (const auto& [x, y] : g2.edges)
    for (int r = 0; r < n1; ++r)
      tagged.push_back({{r * n2 + x, r * n2 + y}, EdgeOrigin::SecondFactor});

  for (auto& [e, origin] : tagged)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  SimpleGraph g;
  g.vertex_count = static_cast<int>(total);
  g.edges.reserve(tagged.size());
  g.edge_origins.reserve(tagged.size());
  for (const auto& [e, origin] : tagged) {
    g.edges.push_back(e);
    g.edge_origins.push_back(origin);
  }

  if (!g1.vertex_labels.empty() && !g2.vertex_labels.empty()) {
    g.vertex_labels.reserve(total);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b)
        g.vertex_labels.push_back("(" + g1.vertex_labels[a] + "," + g2.vertex_labels[b] + ")");
  }
  return g;
}

ComponentPartition components(const SimpleGraph& graph) {
  return components(graph, [](std::size_t) { return true; });
}

ComponentPartition components(const SimpleGraph& graph,
                              const std::function<bool(std::size_t)>& keep_edge) {
  UnionFind uf(graph.vertex_count);
  for (std::size_t i = 0; i < graph.edges.size(); ++i)
    if (keep_edge(i)) uf.unite(graph.edges[i].first, graph.edges[i].second);

  ComponentPartition partition;
  partition.component_of.assign(graph.vertex_count, -1);
  std::vector<int> root_index(graph.vertex_count, -1);
  for (int v = 0; v < graph.vertex_count; ++v) {
    const int root = uf.find(v);
    if (root_index[root] < 0) root_index[root] = partition.component_count++;
    partition.component_of[v] = root_index[root];
  }
  return partition;
}

bool is_connected(const SimpleGraph& graph) {
  if (graph.vertex_count == 0) return true;
  return components(graph).component_count == 1;
}

bool is_bipartite(const SimpleGraph& graph) {
  std::vector<std::vector<int>> adjacency(graph.vertex_count);
  for (const auto& [u, v] : graph.edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  std::vector<int> side(graph.vertex_count, -1);
  for (int start = 0; start < graph.vertex_count; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adjacency[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

DegreeProfile degree_profile(const SimpleGraph& graph) {
  DegreeProfile profile;
  profile.degrees.assign(graph.vertex_count, 0);
  for (const auto& [u, v] : graph.edges) {
    ++profile.degrees[u];
    ++profile.degrees[v];
  }
  profile.is_regular =
      graph.vertex_count == 0 ||
      std::all_of(profile.degrees.begin(), profile.degrees.end(),
                  [&](int d) { return d == profile.degrees[0]; });
  return profile;
}

}  // namespace rigidcay
