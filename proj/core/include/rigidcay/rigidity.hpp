#pragma once

#include <optional>
#include <string>

#include "rigidcay/nac_search.hpp"

namespace rigidcay {

struct PebbleGameResult {
  int rank = 0;  // size of a maximum (2,3)-sparse edge subset
  std::vector<Edge> independent_edges;
};

/// Lee-Streinu (2,3)-pebble game. rank == 2|V|-3 iff the graph contains a
/// spanning Laman subgraph.
PebbleGameResult pebble_game_23(const SimpleGraph& graph);

/// |E| < 2|V|-3 on a connected graph. Throws InvalidInputError when the
/// graph is disconnected.
bool laman_count_movable(const SimpleGraph& graph);

/// |E| == 2|V|-3 and every subgraph is (2,3)-sparse.
bool is_laman_graph(const SimpleGraph& graph);

enum class Classification { Rigid, Flexible, Movable, FlexibleMovabilityUnknown };

std::string to_string(Classification c);

struct RigidityReport {
  bool laman_count_movable = false;
  bool has_spanning_laman = false;
  int pebble_rank = 0;
  /// True when a NAC-coloring was found (established, not merely possible).
  bool nac_exists = false;
  /// Unset when the budget truncated the good-coloring search.
  std::optional<bool> good_nac_exists;
  Classification classification = Classification::FlexibleMovabilityUnknown;
  std::optional<EdgeColoring> nac_certificate;
  std::optional<EdgeColoring> good_nac_certificate;
  /// Machine-checkable reasons backing a Movable verdict.
  std::vector<std::string> movability_reasons;
  /// True when any search ran out of budget before deciding.
  bool partial = false;
};

/// Combines the exhaustive NAC search, the good-coloring search and the
/// count/sparsity criteria:
///   - Rigid: the NAC search completed and found nothing.
///   - Movable: a good coloring exists, or |E| < 2|V|-3, or no spanning
///     Laman subgraph exists; a certificate is always attached.
///   - Flexible: a NAC-coloring exists, the good-coloring search completed
///     without success and the count tests fail (movability stays open).
///   - FlexibleMovabilityUnknown: the budget ran out before any of the above
///     could be decided.
RigidityReport classify(const SimpleGraph& graph, const SearchOptions& options = {});

}  // namespace rigidcay
