#pragma once

#include <optional>

#include "rigidcay/graph.hpp"

namespace rigidcay {

enum class EdgeColor : std::uint8_t { Red = 0, Blue = 1 };

/// Total red/blue coloring; colors[i] belongs to graph.edges[i].
struct EdgeColoring {
  std::vector<EdgeColor> colors;
};

EdgeColoring swapped(const EdgeColoring& coloring);

struct NacVerdict {
  bool is_surjective = false;
  bool is_nac = false;
  bool is_good = false;
  /// An edge whose endpoints lie in one component of the opposite color
  /// (set when the coloring is not a NAC-coloring for a non-surjectivity
  /// unrelated reason).
  std::optional<Edge> offending_edge;
  /// Two distinct vertices joined by both a red and a blue path (set when
  /// the goodness test fails).
  std::optional<std::pair<int, int>> witness_pair;
};

/// Components of the subgraph of edges with the given color.
ComponentPartition color_components(const SimpleGraph& graph,
                                    const EdgeColoring& coloring, EdgeColor color);

/// Surjective and no blue edge inside a red component nor red edge inside a
/// blue component. Equivalent to: no cycle carries exactly one off-color
/// edge. Requires at least one edge.
NacVerdict is_nac(const SimpleGraph& graph, const EdgeColoring& coloring);

/// Additionally requires every (red component, blue component) pair to share
/// at most one vertex.
NacVerdict is_good_nac(const SimpleGraph& graph, const EdgeColoring& coloring);

/// Edge {x, s.x} is blue iff s (or its inverse) lies in blue_part. blue_part
/// must be a nonempty subset of the generating set whose inverse closure does
/// not cover all generators.
EdgeColoring generator_class_coloring(const SimpleGraph& cayley,
                                      const std::vector<int>& blue_part);

/// First-factor edges red, second-factor edges blue. Requires origin tags.
EdgeColoring product_coloring(const SimpleGraph& product);

}  // namespace rigidcay
