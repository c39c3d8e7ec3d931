#include "rigidcay/nac.hpp"

#include <algorithm>
#include <unordered_map>

#include "rigidcay/errors.hpp"

namespace rigidcay {

EdgeColoring swapped(const EdgeColoring& coloring) {
  EdgeColoring out;
  out.colors.reserve(coloring.colors.size());
  for (EdgeColor c : coloring.colors)
    out.colors.push_back(c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red);
  return out;
}

ComponentPartition color_components(const SimpleGraph& graph, const EdgeColoring& coloring,
                                    EdgeColor color) {
  return components(graph, [&](std::size_t i) { return coloring.colors[i] == color; });
}

namespace {

void require_colorable(const SimpleGraph& graph, const EdgeColoring& coloring) {
  if (graph.edges.empty()) throw InvalidInputError("coloring checks need at least one edge");
  if (coloring.colors.size() != graph.edges.size())
    throw InvalidInputError("coloring does not cover the edge set");
}

NacVerdict nac_verdict(const SimpleGraph& graph, const EdgeColoring& coloring,
                       const ComponentPartition& red, const ComponentPartition& blue) {
  NacVerdict verdict;
  std::size_t reds = 0;
  for (EdgeColor c : coloring.colors)
    if (c == EdgeColor::Red) ++reds;
  verdict.is_surjective = reds > 0 && reds < coloring.colors.size();

  bool violation = false;
  for (std::size_t i = 0; i < graph.edges.size() && !violation; ++i) {
    const auto& [u, v] = graph.edges[i];
    const auto& opposite = coloring.colors[i] == EdgeColor::Blue ? red : blue;
    if (opposite.component_of[u] == opposite.component_of[v]) {
      violation = true;
      verdict.offending_edge = graph.edges[i];
    }
  }
  verdict.is_nac = verdict.is_surjective && !violation;
  return verdict;
}

}  // namespace

NacVerdict is_nac(const SimpleGraph& graph, const EdgeColoring& coloring) {
  require_colorable(graph, coloring);
  const auto red = color_components(graph, coloring, EdgeColor::Red);
  const auto blue = color_components(graph, coloring, EdgeColor::Blue);
  return nac_verdict(graph, coloring, red, blue);
}

NacVerdict is_good_nac(const SimpleGraph& graph, const EdgeColoring& coloring) {
  require_colorable(graph, coloring);
  const auto red = color_components(graph, coloring, EdgeColor::Red);
  const auto blue = color_components(graph, coloring, EdgeColor::Blue);
  NacVerdict verdict = nac_verdict(graph, coloring, red, blue);

  // |R_i n B_j| <= 1: no two vertices may share both component indices.
  std::unordered_map<long long, int> first_vertex;
  first_vertex.reserve(graph.vertex_count * 2);
  bool pair_ok = true;
  for (int v = 0; v < graph.vertex_count; ++v) {
    const long long key =
        static_cast<long long>(red.component_of[v]) * blue.component_count +
        blue.component_of[v];
    const auto [it, inserted] = first_vertex.emplace(key, v);
    if (!inserted) {
      verdict.witness_pair = {it->second, v};
      pair_ok = false;
      break;
    }
  }
  verdict.is_good = verdict.is_nac && pair_ok;
  return verdict;
}

EdgeColoring generator_class_coloring(const SimpleGraph& cayley,
                                      const std::vector<int>& blue_part) {
  if (!cayley.cayley.has_value())
    throw InvalidInputError("generator_class_coloring needs a Cayley graph with group labels");
  const CayleyStructure& structure = *cayley.cayley;
  const FiniteGroup& group = structure.group;
  const std::vector<int>& gens = structure.generators;

  for (int s : blue_part)
    if (!std::binary_search(gens.begin(), gens.end(), s))
      throw InvalidPartitionError("blue class element " + group.element_name(s) +
                                  " is not a generator");
  std::vector<char> blue_class(group.order(), 0);
  std::size_t blue_size = 0;
  for (int s : blue_part) {
    for (int t : {s, group.invert(s)}) {
      if (!blue_class[t]) {
        blue_class[t] = 1;
        ++blue_size;
      }
    }
  }
  if (blue_size == 0) throw InvalidPartitionError("blue class is empty");
  if (blue_size >= gens.size())
    throw InvalidPartitionError("blue class covers the whole generating set");

  EdgeColoring coloring;
  coloring.colors.reserve(cayley.edges.size());
  for (const auto& [u, v] : cayley.edges) {
    const int s = group.multiply(v, group.invert(u));
    const bool blue = blue_class[s];
    if (blue != static_cast<bool>(blue_class[group.invert(s)]))
      throw AmbiguousColoringError("edge realized by generators of both classes");
    coloring.colors.push_back(blue ? EdgeColor::Blue : EdgeColor::Red);
  }
  return coloring;
}

EdgeColoring product_coloring(const SimpleGraph& product) {
  if (product.edge_origins.size() != product.edges.size())
    throw InvalidInputError("product_coloring needs factor-of-origin tags");
  EdgeColoring coloring;
  coloring.colors.reserve(product.edges.size());
  for (EdgeOrigin origin : product.edge_origins)
    coloring.colors.push_back(origin == EdgeOrigin::FirstFactor ? EdgeColor::Red
                                                                : EdgeColor::Blue);
  return coloring;
}

}  // namespace rigidcay
