#pragma once

#include <string>
#include <vector>

#include "rigidcay/conditions.hpp"
#include "rigidcay/families.hpp"
#include "rigidcay/flex.hpp"
#include "rigidcay/rigidity.hpp"

namespace rigidcay {

// Graph JSON: {"edges": [[u,v],...], "group": "<descriptor>",
//              "labels": {"0": "...", ...}, "vertices": n}
// plus "generators" (element names) for Cayley graphs and "edge_origins"
// (0|1 per edge) for cartesian products. Optional keys are omitted when
// empty, keys are sorted and edges canonical, so save(load(s)) == s.
std::string graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const std::string& text);

// Coloring JSON: {"blue": [[u,v],...], "red": [[u,v],...]}
std::string coloring_to_json(const SimpleGraph& graph, const EdgeColoring& coloring);
EdgeColoring coloring_from_json(const SimpleGraph& graph, const std::string& text);

// Frames JSON: {"frames": [{"angle": a, "positions": {"0": [x,y], ...}}, ...]}
std::string frames_to_json(const std::vector<RealizationFrame>& frames);
/// Inverse of frames_to_json; edge lengths are left empty.
std::vector<RealizationFrame> frames_from_json(const std::string& text);

std::string verdict_to_json(const NacVerdict& verdict);
std::string condition_to_json(const ConditionReport& report);
std::string partition_condition_to_json(const PartitionConditionReport& report);
std::string rigidity_report_to_json(const SimpleGraph& graph, const RigidityReport& report);
std::string search_result_to_json(const SimpleGraph& graph, const SearchResult& result,
                                  std::size_t coloring_limit);
std::string family_to_json(const FamilyInstance& instance);

std::string graph_to_dot(const SimpleGraph& graph, const EdgeColoring* coloring = nullptr);
std::string frame_to_svg(const SimpleGraph& graph, const EdgeColoring* coloring,
                         const RealizationFrame& frame);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rigidcay
