#pragma once

// Brute-force reference implementations used to pin expected values and to
// cross-check the production algorithms. Everything here works straight from
// the definitions (cycle enumeration, path search, subset counting) and
// stays independent of the union-find / pebble-game code paths.

#include <cstdint>
#include <random>
#include <vector>

#include "rigidcay/nac.hpp"

namespace rigidcay::oracle {

/// NAC by definition: surjective and no simple cycle carries exactly one
/// blue or exactly one red edge. Cycles are enumerated by backtracking.
bool cycle_is_nac(const SimpleGraph& graph, const EdgeColoring& coloring);

/// Good by definition: cycle_is_nac and no two distinct vertices are joined
/// by both an all-red and an all-blue path (per-color DFS reachability).
bool dual_path_is_good(const SimpleGraph& graph, const EdgeColoring& coloring);

/// Component partition by plain BFS in vertex order (same dense indexing as
/// the production partition).
ComponentPartition bfs_components(const SimpleGraph& graph,
                                  const std::vector<bool>& keep_edge);

/// Size of a maximum (2,3)-sparse edge subset, via greedy insertion with the
/// definitional every-vertex-subset count check. Needs vertex_count <= 16.
int sparse23_rank_greedy(const SimpleGraph& graph);

/// Same, by exhaustive edge-subset enumeration. Needs |E| <= 16.
int sparse23_rank_exhaustive(const SimpleGraph& graph);

/// Number of NAC-colorings over all 2^|E| colorings, counted one by one with
/// a self-contained checker. Needs |E| <= 20.
long long unpruned_nac_count(const SimpleGraph& graph);

/// Calls fn(graph) for every connected labeled graph with exactly n vertices.
void for_each_connected_graph(int n, const std::function<void(const SimpleGraph&)>& fn);

SimpleGraph random_graph(std::mt19937& rng, int max_vertices, double edge_probability,
                         bool require_edge);

EdgeColoring random_coloring(std::mt19937& rng, std::size_t edge_count);

}  // namespace rigidcay::oracle
