#include "rigidcay/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rigidcay/errors.hpp"

#include <json.hpp>

namespace rigidcay {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

std::vector<Edge> edges_from_json(const json& j, int vertex_count, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of pairs");
  std::vector<Edge> edges;
  edges.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer())
      throw ParseError(std::string(what) + " entries must be [u, v] integer pairs");
    const int u = item[0].get<int>();
    const int v = item[1].get<int>();
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw InvalidInputError("unknown vertex id in " + std::string(what) + ": [" +
                              std::to_string(u) + "," + std::to_string(v) + "]");
    edges.emplace_back(u, v);
  }
  return edges;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string graph_to_json(const SimpleGraph& graph) {
  json j;
  j["vertices"] = graph.vertex_count;
  j["edges"] = edges_to_json(graph.edges);
  j["bipartite"] = is_bipartite(graph);  // informational, recomputed on save
  if (!graph.vertex_labels.empty()) {
    json labels = json::object();
    for (int v = 0; v < graph.vertex_count; ++v)
      labels[std::to_string(v)] = graph.vertex_labels[v];
    j["labels"] = labels;
  }
  if (!graph.edge_origins.empty()) {
    json origins = json::array();
    for (EdgeOrigin o : graph.edge_origins) origins.push_back(static_cast<int>(o));
    j["edge_origins"] = origins;
  }
  if (graph.cayley.has_value()) {
    j["group"] = graph.cayley->group.descriptor_text();
    json gens = json::array();
    for (int s : graph.cayley->generators)
      gens.push_back(graph.cayley->group.element_name(s));
    j["generators"] = gens;
  }
  return dump(j);
}

SimpleGraph graph_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph JSON needs 'vertices' and 'edges'");
  const int n = j["vertices"].get<int>();
  SimpleGraph graph = make_graph(n, edges_from_json(j["edges"], n, "edges"));

  if (j.contains("labels")) {
    graph.vertex_labels.assign(n, "");
    for (const auto& [key, value] : j["labels"].items()) {
      const int v = std::stoi(key);
      if (v < 0 || v >= n) throw InvalidInputError("unknown vertex id in labels: " + key);
      graph.vertex_labels[v] = value.get<std::string>();
    }
  }
  if (j.contains("edge_origins")) {
    const auto& origins = j["edge_origins"];
    if (origins.size() != graph.edges.size())
      throw InvalidInputError("edge_origins must tag every edge");
    for (const auto& o : origins)
      graph.edge_origins.push_back(o.get<int>() == 0 ? EdgeOrigin::FirstFactor
                                                     : EdgeOrigin::SecondFactor);
  }
  if (j.contains("group")) {
    const FiniteGroup group = make_group(GroupDescriptor::parse(j["group"].get<std::string>()));
    CayleyStructure structure;
    structure.group = group;
    if (j.contains("generators"))
      for (const auto& name : j["generators"])
        structure.generators.push_back(group.element_from_name(name.get<std::string>()));
    std::sort(structure.generators.begin(), structure.generators.end());
    structure.generating =
        static_cast<int>(subgroup_closure(group, structure.generators).size()) == group.order();
    graph.cayley = std::move(structure);
  }
  return graph;
}

std::string coloring_to_json(const SimpleGraph& graph, const EdgeColoring& coloring) {
  if (coloring.colors.size() != graph.edges.size())
    throw InvalidInputError("coloring does not cover the edge set");
  std::vector<Edge> red, blue;
  for (std::size_t i = 0; i < graph.edges.size(); ++i)
    (coloring.colors[i] == EdgeColor::Red ? red : blue).push_back(graph.edges[i]);
  json j;
  j["red"] = edges_to_json(red);
  j["blue"] = edges_to_json(blue);
  return dump(j);
}

EdgeColoring coloring_from_json(const SimpleGraph& graph, const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("red") || !j.contains("blue"))
    throw ParseError("coloring JSON needs 'red' and 'blue' edge lists");
  EdgeColoring coloring;
  coloring.colors.assign(graph.edges.size(), EdgeColor::Red);
  std::vector<char> seen(graph.edges.size(), 0);
  for (const char* key : {"red", "blue"}) {
    for (const auto& e : edges_from_json(j[key], graph.vertex_count, key)) {
      const int idx = graph.edge_index(e.first, e.second);
      if (idx < 0)
        throw InvalidInputError("coloring lists a non-edge: [" + std::to_string(e.first) +
                                "," + std::to_string(e.second) + "]");
      if (seen[idx])
        throw InvalidInputError("edge colored twice: [" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + "]");
      seen[idx] = 1;
      coloring.colors[idx] = key[0] == 'r' ? EdgeColor::Red : EdgeColor::Blue;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InvalidInputError("coloring leaves some edge uncolored");
  return coloring;
}

std::string frames_to_json(const std::vector<RealizationFrame>& frames) {
  json out;
  out["frames"] = json::array();
  for (const auto& frame : frames) {
    json f;
    f["angle"] = frame.angle;
    json positions = json::object();
    for (std::size_t v = 0; v < frame.positions.size(); ++v)
      positions[std::to_string(v)] = json::array({frame.positions[v].x, frame.positions[v].y});
    f["positions"] = positions;
    out["frames"].push_back(f);
  }
  return dump(out);
}

std::vector<RealizationFrame> frames_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("frames") || !j["frames"].is_array())
    throw ParseError("frames JSON needs a 'frames' array");
  std::vector<RealizationFrame> frames;
  for (const auto& f : j["frames"]) {
    RealizationFrame frame;
    frame.angle = f.at("angle").get<double>();
    const auto& positions = f.at("positions");
    frame.positions.resize(positions.size());
    for (const auto& [key, value] : positions.items()) {
      const std::size_t v = std::stoul(key);
      if (v >= frame.positions.size())
        throw InvalidInputError("frame positions are not dense over the vertex set");
      frame.positions[v] = {value[0].get<double>(), value[1].get<double>()};
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

std::string verdict_to_json(const NacVerdict& verdict) {
  json j;
  j["is_surjective"] = verdict.is_surjective;
  j["is_nac"] = verdict.is_nac;
  j["is_good"] = verdict.is_good;
  if (verdict.offending_edge.has_value())
    j["offending_edge"] =
        json::array({verdict.offending_edge->first, verdict.offending_edge->second});
  if (verdict.witness_pair.has_value())
    j["witness_pair"] =
        json::array({verdict.witness_pair->first, verdict.witness_pair->second});
  return dump(j);
}

std::string condition_to_json(const ConditionReport& report) {
  json j;
  j["condition"] = report.condition_name;
  j["holds"] = report.holds;
  j["witnesses"] = report.witnesses;
  return dump(j);
}

std::string partition_condition_to_json(const PartitionConditionReport& report) {
  json j;
  j["flexible"] = {{"condition", report.flexible.condition_name},
                   {"holds", report.flexible.holds},
                   {"witnesses", report.flexible.witnesses}};
  j["movable"] = {{"condition", report.movable.condition_name},
                  {"holds", report.movable.holds},
                  {"witnesses", report.movable.witnesses}};
  return dump(j);
}

std::string rigidity_report_to_json(const SimpleGraph& graph, const RigidityReport& report) {
  json j;
  j["classification"] = to_string(report.classification);
  j["laman_count_movable"] = report.laman_count_movable;
  j["has_spanning_laman"] = report.has_spanning_laman;
  j["pebble_rank"] = report.pebble_rank;
  j["nac_exists"] = report.nac_exists;
  if (report.good_nac_exists.has_value())
    j["good_nac_exists"] = *report.good_nac_exists;
  else
    j["good_nac_exists"] = nullptr;
  switch (report.classification) {
    case Classification::Movable:
      j["movable"] = "yes";
      break;
    case Classification::Rigid:
      j["movable"] = "no";
      break;
    default:
      j["movable"] = "unknown";
  }
  j["partial"] = report.partial;
  j["movability_reasons"] = report.movability_reasons;
  if (report.nac_certificate.has_value())
    j["nac_certificate"] = parse_json(coloring_to_json(graph, *report.nac_certificate));
  if (report.good_nac_certificate.has_value())
    j["good_nac_certificate"] =
        parse_json(coloring_to_json(graph, *report.good_nac_certificate));
  return dump(j);
}

std::string search_result_to_json(const SimpleGraph& graph, const SearchResult& result,
                                  std::size_t coloring_limit) {
  json j;
  j["count"] = result.nac_count;
  j["complete"] = result.complete;
  j["nodes"] = result.nodes;
  json list = json::array();
  for (std::size_t i = 0; i < result.colorings.size() && i < coloring_limit; ++i)
    list.push_back(parse_json(coloring_to_json(graph, result.colorings[i])));
  j["colorings"] = list;
  j["colorings_truncated"] = result.colorings.size() > coloring_limit;
  return dump(j);
}

std::string family_to_json(const FamilyInstance& instance) {
  const auto profile = degree_profile(instance.graph);
  json j;
  j["family"] = instance.family_name;
  j["predicted"] = {{"vertices", instance.predicted_vertices},
                    {"edges", instance.predicted_edges},
                    {"regularity", instance.predicted_regularity}};
  j["actual"] = {{"vertices", instance.graph.vertex_count},
                 {"edges", instance.graph.edges.size()},
                 {"regularity", profile.degrees.empty() ? 0 : profile.degrees[0]}};
  j["good_nac"] = true;  // asserted at construction
  if (!instance.translated_generators.empty())
    j["translated_generators"] = instance.translated_generators;
  j["graph"] = parse_json(graph_to_json(instance.graph));
  j["coloring"] = parse_json(coloring_to_json(instance.graph, instance.coloring));
  return dump(j);
}

std::string graph_to_dot(const SimpleGraph& graph, const EdgeColoring* coloring) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < graph.vertex_count; ++v) {
    out << "  " << v;
    if (!graph.vertex_labels.empty()) out << " [label=\"" << graph.vertex_labels[v] << "\"]";
    out << ";\n";
  }
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    out << "  " << graph.edges[i].first << " -- " << graph.edges[i].second;
    if (coloring != nullptr)
      out << " [color=" << (coloring->colors[i] == EdgeColor::Red ? "red" : "blue") << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string frame_to_svg(const SimpleGraph& graph, const EdgeColoring* coloring,
                         const RealizationFrame& frame) {
  double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  if (!frame.positions.empty()) {
    min_x = max_x = frame.positions[0].x;
    min_y = max_y = frame.positions[0].y;
    for (const auto& p : frame.positions) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = 560.0 / span;
  auto tx = [&](double x) { return 20.0 + (x - min_x) * scale; };
  auto ty = [&](double y) { return 580.0 - (y - min_y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& [u, v] = graph.edges[i];
    const char* color = "gray";
    if (coloring != nullptr)
      color = coloring->colors[i] == EdgeColor::Red ? "red" : "blue";
    out << "  <line x1=\"" << tx(frame.positions[u].x) << "\" y1=\"" << ty(frame.positions[u].y)
        << "\" x2=\"" << tx(frame.positions[v].x) << "\" y2=\"" << ty(frame.positions[v].y)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : frame.positions)
    out << "  <circle cx=\"" << tx(p.x) << "\" cy=\"" << ty(p.y)
        << "\" r=\"4\" fill=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write file: " + path);
  out << content;
}

}  // namespace rigidcay
