#pragma once

#include "rigidcay/nac.hpp"

namespace rigidcay {

enum class SearchMode { FirstAny, FirstGood, CountAll, EnumerateAll };

struct SearchOptions {
  SearchMode mode = SearchMode::FirstAny;
  long long budget = 10'000'000;  // node limit over color assignments
  int workers = 1;
  int split_depth = 6;
  int exhaustive_edge_cap = 30;   // CountAll/EnumerateAll refuse larger graphs
};

struct SearchResult {
  std::vector<EdgeColoring> colorings;
  /// CountAll / EnumerateAll: total NAC-colorings over all 2^|E|-2 surjective
  /// colorings (the fixed-first-edge symmetry is expanded back out).
  long long nac_count = 0;
  /// False when the node budget truncated the search (partial result).
  bool complete = true;
  long long nodes = 0;
};

/// Backtracking search over edge 2-colorings with the first edge pinned red.
/// Branches die as soon as an off-color edge closes inside a component of the
/// other color.
SearchResult search_nac(const SimpleGraph& graph, const SearchOptions& options = {});

}  // namespace rigidcay
