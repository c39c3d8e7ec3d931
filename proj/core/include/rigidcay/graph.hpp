#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidcay/group.hpp"

namespace rigidcay {

using Edge = std::pair<int, int>;

/// Which factor of a cartesian product an edge came from.
enum class EdgeOrigin : std::uint8_t { FirstFactor = 0, SecondFactor = 1 };

/// Group structure retained by cayley_graph so that colorings and condition
/// checks can resolve each edge back to its generator class.
struct CayleyStructure {
  FiniteGroup group;
  std::vector<int> generators;  // symmetric, identity-free, sorted
  bool generating = true;       // false: graph is disconnected (warning, not error)
};

/// Finite simple undirected loopless graph. Edges are canonical (u < v),
/// sorted and unique. Immutable by convention after construction.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::string> vertex_labels;   // empty or vertex_count entries
  std::vector<EdgeOrigin> edge_origins;     // empty, or one tag per edge (products)
  std::optional<CayleyStructure> cayley;

  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  /// Index into edges for the canonical pair, or -1.
  int edge_index(int u, int v) const;
};

/// Canonicalizes, validates ranges, rejects loops, drops duplicates.
SimpleGraph make_graph(int vertex_count, std::vector<Edge> edges);

SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);

/// Vertices are group elements; {x, s.x} is an edge for every generator s.
/// gens must be symmetric and identity-free. A non-generating set yields a
/// disconnected graph flagged via CayleyStructure::generating.
SimpleGraph cayley_graph(const GeneratorSet& gens);

/// Cartesian (box) product; vertex (a, b) gets id a * |V2| + b. Every edge is
/// tagged with its factor of origin.
SimpleGraph cartesian_product(const SimpleGraph& g1, const SimpleGraph& g2);

struct ComponentPartition {
  std::vector<int> component_of;  // dense indices, assigned in vertex order
  int component_count = 0;
};

ComponentPartition components(const SimpleGraph& graph);
/// Partition under the subgraph of edges whose index satisfies keep_edge.
ComponentPartition components(const SimpleGraph& graph,
                              const std::function<bool(std::size_t)>& keep_edge);

bool is_connected(const SimpleGraph& graph);

/// Reported as metadata only; bipartite graphs are first-class citizens
/// everywhere (even cycles, products of bipartite factors, ...).
bool is_bipartite(const SimpleGraph& graph);

struct DegreeProfile {
  bool is_regular = false;
  std::vector<int> degrees;
};

DegreeProfile degree_profile(const SimpleGraph& graph);

}  // namespace rigidcay
