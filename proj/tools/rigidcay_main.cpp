// rigidcay CLI: build Cayley graphs, check and search NAC-colorings, run the
// subgroup-intersection movability conditions, generate the graph families,
// synthesize verified flexes, and convert between JSON/DOT/SVG.

#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigidcay/config.hpp"
#include "rigidcay/errors.hpp"
#include "rigidcay/io.hpp"

using namespace rigidcay;

namespace {

// Elements are ';'-separated; plain residue lists may also use ','.
std::vector<std::string> split_elements(const std::string& text) {
  if (text.empty()) return {};
  char sep = ';';
  if (text.find(';') == std::string::npos && text.find('(') == std::string::npos &&
      text.find('[') == std::string::npos)
    sep = ',';
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else if (!(ch == ' ' && depth == 0 && current.empty())) {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

std::vector<int> parse_elements(const FiniteGroup& group, const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_elements(text))
    if (!part.empty()) out.push_back(group.element_from_name(part));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : split_elements(text))
    if (!part.empty()) out.push_back(std::stoi(part));
  return out;
}

SimpleGraph load_graph(const std::string& path) { return graph_from_json(read_text_file(path)); }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

int expectation_failed(const std::string& expectation) {
  std::cerr << "expectation not met: " << expectation << "\n";
  return 1;
}

struct GroupArgs {
  std::string descriptor;
  std::string closure_seed;
  std::string gens;
  std::string order_of;
};

int run_group(const GroupArgs& args) {
  const auto group = make_group(GroupDescriptor::parse(args.descriptor));
  nlohmann::json j;
  j["descriptor"] = group.descriptor_text();
  j["order"] = group.order();
  j["identity"] = group.element_name(group.identity());
  if (!args.closure_seed.empty()) {
    const auto closure = subgroup_closure(group, parse_elements(group, args.closure_seed));
    j["closure_size"] = closure.size();
    auto names = nlohmann::json::array();
    for (int g : closure) names.push_back(group.element_name(g));
    j["closure"] = names;
  }
  if (!args.gens.empty()) {
    const auto gens = make_generator_set(group, parse_elements(group, args.gens));
    const auto closed = symmetric_closure(gens);
    auto names = nlohmann::json::array();
    for (int g : closed.elements) names.push_back(group.element_name(g));
    j["symmetric_closure"] = names;
    j["generating"] = is_generating(gens);
  }
  if (!args.order_of.empty()) {
    const int x = group.element_from_name(args.order_of);
    int k = 1, a = x;
    while (a != group.identity()) {
      a = group.multiply(a, x);
      ++k;
    }
    j["element_order"] = k;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

struct CayleyArgs {
  std::string descriptor;
  std::string gens;
  bool raw = false;
  std::string blue_part;
  std::string out;
  std::string out_coloring;
};

int run_cayley(const CayleyArgs& args) {
  const auto group = make_group(GroupDescriptor::parse(args.descriptor));
  auto gens = make_generator_set(group, parse_elements(group, args.gens));
  if (!args.raw) gens = symmetric_closure(gens);
  const auto graph = cayley_graph(gens);
  if (!graph.cayley->generating)
    std::cerr << "warning: generating set does not span the group; graph is disconnected\n";
  emit(graph_to_json(graph), args.out);
  if (!args.blue_part.empty()) {
    const auto coloring = generator_class_coloring(graph, parse_elements(group, args.blue_part));
    emit(coloring_to_json(graph, coloring), args.out_coloring);
  }
  return 0;
}

struct CheckArgs {
  std::string graph_path;
  std::string coloring_path;
  std::string expect;
};

int run_check(const CheckArgs& args) {
  const auto graph = load_graph(args.graph_path);
  const auto coloring = coloring_from_json(graph, read_text_file(args.coloring_path));
  const auto verdict = is_good_nac(graph, coloring);
  std::cout << verdict_to_json(verdict);
  if (args.expect == "nac" && !verdict.is_nac) return expectation_failed("nac");
  if (args.expect == "good" && !verdict.is_good) return expectation_failed("good");
  return 0;
}

struct SearchArgs {
  std::string graph_path;
  std::string mode = "first-any";
  long long budget = 10'000'000;
  int workers = 1;
  int split_depth = 6;
  int max_edges = 30;
  std::size_t limit = 64;
  std::string expect;
  std::string out;
};

int run_search(const SearchArgs& args) {
  SearchOptions options;
  if (args.mode == "first-any")
    options.mode = SearchMode::FirstAny;
  else if (args.mode == "first-good")
    options.mode = SearchMode::FirstGood;
  else if (args.mode == "count-all")
    options.mode = SearchMode::CountAll;
  else if (args.mode == "enumerate-all")
    options.mode = SearchMode::EnumerateAll;
  else
    throw InvalidParameterError("unknown search mode: " + args.mode);
  options.budget = args.budget;
  options.workers = args.workers;
  options.split_depth = args.split_depth;
  options.exhaustive_edge_cap = args.max_edges;

  const auto graph = load_graph(args.graph_path);
  const auto result = search_nac(graph, options);
  emit(search_result_to_json(graph, result, args.limit), args.out);
  if (args.expect == "found" && result.colorings.empty()) return expectation_failed("found");
  return 0;
}

struct ClassifyArgs {
  std::string graph_path;
  long long budget = 10'000'000;
  int workers = 1;
  std::string expect;
  std::string out;
};

int run_classify(const ClassifyArgs& args) {
  SearchOptions options;
  options.budget = args.budget;
  options.workers = args.workers;
  const auto graph = load_graph(args.graph_path);
  const auto report = classify(graph, options);
  emit(rigidity_report_to_json(graph, report), args.out);
  if (!args.expect.empty() && to_string(report.classification) != args.expect)
    return expectation_failed(args.expect + " (got " + to_string(report.classification) + ")");
  return 0;
}

struct TheoremArgs {
  std::string descriptor;
  std::string gens;
  std::string s;
  std::string partition;
  bool pairwise = false;
  std::string expect;
};

int run_theorem(const TheoremArgs& args) {
  const auto group = make_group(GroupDescriptor::parse(args.descriptor));
  const auto s_set = parse_elements(group, args.gens);
  bool holds = false;
  if (!args.s.empty()) {
    const int s = group.element_from_name(args.s);
    const auto flexible = check_flexible_condition(group, s_set, s);
    const auto movable = check_movable_condition(group, s_set, s);
    nlohmann::json j;
    j["flexible"] = nlohmann::json::parse(condition_to_json(flexible));
    j["movable"] = nlohmann::json::parse(condition_to_json(movable));
    std::cout << j.dump(2) << "\n";
    holds = movable.holds;
  } else if (!args.partition.empty()) {
    const auto report =
        check_partition_condition(group, s_set, parse_elements(group, args.partition));
    std::cout << partition_condition_to_json(report);
    holds = report.movable.holds;
  } else if (args.pairwise) {
    const auto report = check_pairwise_trivial(group, s_set);
    std::cout << condition_to_json(report);
    holds = report.holds;
  } else {
    throw InvalidParameterError("theorem-check needs one of --s, --partition, --pairwise");
  }
  if (args.expect == "holds" && !holds) return expectation_failed("holds");
  return 0;
}

struct FamilyArgs {
  std::string name;
  int q = 0, alpha = 0, n = 0, k = 1, p = 0, n2 = 0, p2 = 0, r = 0;
  std::string moduli;
  std::string out_graph;
  std::string out_coloring;
};

int run_family(const FamilyArgs& args) {
  FamilyInstance instance;
  if (args.name == "abelian-power")
    instance = abelian_power_family(args.q, args.alpha);
  else if (args.name == "abelian-crt")
    instance = abelian_crt_family(parse_int_list(args.moduli));
  else if (args.name == "abelian-involution")
    instance = abelian_involution_family(parse_int_list(args.moduli));
  else if (args.name == "dense")
    instance = dense_abelian_family(args.n, args.k);
  else if (args.name == "sl-elementary")
    instance = sl_family(args.n, args.p, SlVariant::Elementary);
  else if (args.name == "sl-triangular")
    instance = sl_family(args.n, args.p, SlVariant::Triangular);
  else if (args.name == "sl-product")
    instance = args.n2 > 0 ? sl_product_family(args.n, args.p, args.n2,
                                               args.p2 > 0 ? args.p2 : args.p)
                           : sl_product_family_power(args.n, args.p, args.k);
  else if (args.name == "regularity")
    instance = regularity_construction(args.r);
  else
    throw InvalidParameterError("unknown family: " + args.name);

  std::cout << family_to_json(instance);
  if (!args.out_graph.empty()) write_text_file(args.out_graph, graph_to_json(instance.graph));
  if (!args.out_coloring.empty())
    write_text_file(args.out_coloring, coloring_to_json(instance.graph, instance.coloring));
  return 0;
}

struct FlexArgs {
  std::string graph_path;
  std::string coloring_path;
  int samples = 100;
  double tolerance = 1e-9;
  unsigned seed = 0;
  int grid = 36;
  std::string out_frames;
  std::string expect;
};

int run_flex(const FlexArgs& args) {
  const auto graph = load_graph(args.graph_path);
  const auto coloring = coloring_from_json(graph, read_text_file(args.coloring_path));
  auto realization = build_flex(graph, coloring);
  const auto report = verify_flex(realization, graph, args.samples, args.tolerance, args.seed);

  nlohmann::json j;
  j["passed"] = report.passed;
  j["lengths_ok"] = report.lengths_ok;
  j["max_edge_drift"] = report.max_edge_drift;
  j["non_congruent"] = report.non_congruent;
  j["max_pair_variation"] = report.max_pair_variation;
  j["injectivity_checked"] = report.injectivity_checked;
  j["injective"] = report.injective;
  j["perturb_retries"] = report.perturb_retries;
  if (report.failing_angle.has_value()) j["failing_angle"] = *report.failing_angle;
  std::cout << j.dump(2) << "\n";

  if (!args.out_frames.empty()) {
    std::vector<double> grid;
    for (int i = 0; i < args.grid; ++i)
      grid.push_back(2.0 * std::numbers::pi * i / args.grid);
    write_text_file(args.out_frames, frames_to_json(export_frames(realization, grid)));
  }
  if (args.expect == "pass" && !report.passed) return expectation_failed("pass");
  return 0;
}

struct ExportArgs {
  std::string graph_path;
  std::string coloring_path;
  std::string frames_path;
  std::string format = "dot";
  int index = 0;
  std::string out;
};

int run_export(const ExportArgs& args) {
  const auto graph = load_graph(args.graph_path);
  std::optional<EdgeColoring> coloring;
  if (!args.coloring_path.empty())
    coloring = coloring_from_json(graph, read_text_file(args.coloring_path));

  if (args.format == "dot") {
    emit(graph_to_dot(graph, coloring ? &*coloring : nullptr), args.out);
    return 0;
  }
  if (args.format == "svg") {
    if (args.frames_path.empty())
      throw InvalidParameterError("svg export needs --frames");
    const auto frames = frames_from_json(read_text_file(args.frames_path));
    if (args.index < 0 || args.index >= static_cast<int>(frames.size()))
      throw InvalidParameterError("frame index out of range");
    emit(frame_to_svg(graph, coloring ? &*coloring : nullptr, frames[args.index]), args.out);
    return 0;
  }
  throw InvalidParameterError("unknown export format: " + args.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graphs, NAC-colorings, movability conditions, planar flexes"};
  app.require_subcommand(1);

  long long capacity = 0;
  app.add_option("--capacity", capacity,
                 "override element-count caps (also via RIGIDCAY_CAPACITY)");

  GroupArgs group_args;
  auto* group_cmd = app.add_subcommand("group", "print order / closure / generation info");
  group_cmd->add_option("--descriptor", group_args.descriptor, "cyclic:6 | product:(..) | sl:n:p")
      ->required();
  group_cmd->add_option("--closure", group_args.closure_seed, "seed elements for subgroup closure");
  group_cmd->add_option("--gens", group_args.gens, "generator elements to symmetrize and test");
  group_cmd->add_option("--order-of", group_args.order_of, "element whose order to compute");

  CayleyArgs cayley_args;
  auto* cayley_cmd = app.add_subcommand("cayley", "build a Cayley graph and write graph JSON");
  cayley_cmd->add_option("--descriptor", cayley_args.descriptor)->required();
  cayley_cmd->add_option("--gens", cayley_args.gens, "';'-separated elements")->required();
  cayley_cmd->add_flag("--raw", cayley_args.raw, "do not apply the symmetric closure");
  cayley_cmd->add_option("--blue-part", cayley_args.blue_part,
                         "also emit the generator-class coloring with this blue class");
  cayley_cmd->add_option("--out", cayley_args.out, "graph JSON path (default stdout)");
  cayley_cmd->add_option("--out-coloring", cayley_args.out_coloring);

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check-nac", "check a coloring (NAC and goodness)");
  check_cmd->add_option("--graph", check_args.graph_path)->required();
  check_cmd->add_option("--coloring", check_args.coloring_path)->required();
  check_cmd->add_option("--expect", check_args.expect, "nac | good");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search-nac", "search the space of 2-colorings");
  search_cmd->add_option("--graph", search_args.graph_path)->required();
  search_cmd->add_option("--mode", search_args.mode,
                         "first-any | first-good | count-all | enumerate-all");
  search_cmd->add_option("--budget", search_args.budget, "node limit");
  search_cmd->add_option("--workers", search_args.workers);
  search_cmd->add_option("--split-depth", search_args.split_depth,
                         "subtree split depth for parallel workers");
  search_cmd->add_option("--max-edges", search_args.max_edges, "exhaustive-mode edge cap");
  search_cmd->add_option("--limit", search_args.limit, "colorings to include in the output");
  search_cmd->add_option("--expect", search_args.expect, "found");
  search_cmd->add_option("--out", search_args.out);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "rigid / flexible / movable report");
  classify_cmd->add_option("--graph", classify_args.graph_path)->required();
  classify_cmd->add_option("--budget", classify_args.budget);
  classify_cmd->add_option("--workers", classify_args.workers);
  classify_cmd->add_option("--expect", classify_args.expect,
                           "Rigid | Flexible | Movable | FlexibleMovabilityUnknown");
  classify_cmd->add_option("--out", classify_args.out);

  TheoremArgs theorem_args;
  auto* theorem_cmd =
      app.add_subcommand("theorem-check", "subgroup-intersection conditions for C(G,S)");
  theorem_cmd->add_option("--descriptor", theorem_args.descriptor)->required();
  theorem_cmd->add_option("--gens", theorem_args.gens, "the set S")->required();
  theorem_cmd->add_option("--s", theorem_args.s, "single distinguished generator");
  theorem_cmd->add_option("--partition", theorem_args.partition, "the class S1");
  theorem_cmd->add_flag("--pairwise", theorem_args.pairwise, "pairwise trivial intersections");
  theorem_cmd->add_option("--expect", theorem_args.expect, "holds");

  FamilyArgs family_args;
  auto* family_cmd = app.add_subcommand("family", "generate a movable family instance");
  family_cmd
      ->add_option("--name", family_args.name,
                   "abelian-power | abelian-crt | abelian-involution | dense | sl-elementary | "
                   "sl-triangular | sl-product | regularity")
      ->required();
  family_cmd->add_option("--q", family_args.q);
  family_cmd->add_option("--alpha", family_args.alpha);
  family_cmd->add_option("--moduli", family_args.moduli, "e.g. 4,3");
  family_cmd->add_option("--n", family_args.n);
  family_cmd->add_option("--k", family_args.k);
  family_cmd->add_option("--p", family_args.p);
  family_cmd->add_option("--n2", family_args.n2, "second factor dimension (sl-product)");
  family_cmd->add_option("--p2", family_args.p2, "second factor characteristic (sl-product)");
  family_cmd->add_option("--r", family_args.r, "target regularity");
  family_cmd->add_option("--out-graph", family_args.out_graph);
  family_cmd->add_option("--out-coloring", family_args.out_coloring);

  FlexArgs flex_args;
  auto* flex_cmd = app.add_subcommand("flex", "build and verify a one-parameter flex");
  flex_cmd->add_option("--graph", flex_args.graph_path)->required();
  flex_cmd->add_option("--coloring", flex_args.coloring_path)->required();
  flex_cmd->add_option("--samples", flex_args.samples);
  flex_cmd->add_option("--tol", flex_args.tolerance);
  flex_cmd->add_option("--seed", flex_args.seed, "seed for anchor perturbation retries");
  flex_cmd->add_option("--grid", flex_args.grid, "frames to export");
  flex_cmd->add_option("--out-frames", flex_args.out_frames);
  flex_cmd->add_option("--expect", flex_args.expect, "pass");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export", "convert JSON to DOT or SVG");
  export_cmd->add_option("--graph", export_args.graph_path)->required();
  export_cmd->add_option("--coloring", export_args.coloring_path);
  export_cmd->add_option("--frames", export_args.frames_path, "frames JSON (svg only)");
  export_cmd->add_option("--format", export_args.format, "dot | svg");
  export_cmd->add_option("--index", export_args.index, "frame index (svg)");
  export_cmd->add_option("--out", export_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (capacity > 0) set_capacity_override(capacity);
    if (group_cmd->parsed()) return run_group(group_args);
    if (cayley_cmd->parsed()) return run_cayley(cayley_args);
    if (check_cmd->parsed()) return run_check(check_args);
    if (search_cmd->parsed()) return run_search(search_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (theorem_cmd->parsed()) return run_theorem(theorem_args);
    if (family_cmd->parsed()) return run_family(family_args);
    if (flex_cmd->parsed()) return run_flex(flex_args);
    if (export_cmd->parsed()) return run_export(export_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
