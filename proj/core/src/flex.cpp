#include "rigidcay/flex.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "rigidcay/errors.hpp"

namespace rigidcay {

namespace {

Vec2 rotate(const Vec2& v, double c, double s) { return {c * v.x - s * v.y, s * v.x + c * v.y}; }

double dist(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Deterministic anchors, pairwise distinct with a quadratic skew that keeps
// distinct components off each other's rotation circles in practice.
Vec2 red_anchor_at(int i) { return {i * 1.0, i * static_cast<double>(i) * 0.137}; }
Vec2 blue_anchor_at(int j) { return {j * static_cast<double>(j) * 0.149, j * 1.0}; }

}  // namespace

ParamRealization build_flex(const SimpleGraph& graph, const EdgeColoring& coloring) {
  const NacVerdict verdict = is_good_nac(graph, coloring);
  if (!verdict.is_nac)
    throw InvalidColoringError("flex construction needs a NAC-coloring");

  const auto red = color_components(graph, coloring, EdgeColor::Red);
  const auto blue = color_components(graph, coloring, EdgeColor::Blue);

  ParamRealization realization;
  realization.good = verdict.is_good;
  realization.edges = graph.edges;
  realization.edge_colors = coloring.colors;
  realization.vertex_key.reserve(graph.vertex_count);
  for (int v = 0; v < graph.vertex_count; ++v)
    realization.vertex_key.emplace_back(red.component_of[v], blue.component_of[v]);
  realization.red_anchor.reserve(red.component_count);
  for (int i = 0; i < red.component_count; ++i)
    realization.red_anchor.push_back(red_anchor_at(i));
  realization.blue_anchor.reserve(blue.component_count);
  for (int j = 0; j < blue.component_count; ++j)
    realization.blue_anchor.push_back(blue_anchor_at(j));
  return realization;
}

RealizationFrame evaluate(const ParamRealization& realization, double angle) {
  if (!std::isfinite(angle)) throw InvalidParameterError("angle must be finite");
  RealizationFrame frame;
  frame.angle = angle;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  frame.positions.reserve(realization.vertex_key.size());
  for (const auto& [r, b] : realization.vertex_key) {
    const Vec2 rotated = rotate(realization.red_anchor[r], c, s);
    frame.positions.push_back(
        {rotated.x + realization.blue_anchor[b].x, rotated.y + realization.blue_anchor[b].y});
  }
  frame.edge_lengths.reserve(realization.edges.size());
  for (const auto& [u, v] : realization.edges)
    frame.edge_lengths.push_back(dist(frame.positions[u], frame.positions[v]));
  return frame;
}

std::vector<RealizationFrame> export_frames(const ParamRealization& realization,
                                            const std::vector<double>& angle_grid) {
  if (angle_grid.empty()) throw InvalidParameterError("angle grid must be nonempty");
  std::vector<RealizationFrame> frames;
  frames.reserve(angle_grid.size());
  for (double a : angle_grid) frames.push_back(evaluate(realization, a));
  return frames;
}

FlexVerifyReport verify_flex(ParamRealization& realization, const SimpleGraph& graph,
                             int sample_count, double tolerance, unsigned seed) {
  if (sample_count < 2) throw InvalidParameterError("need at least two samples");
  if (realization.edges != graph.edges)
    throw InvalidInputError("realization was built from a different graph");

  const int n = static_cast<int>(realization.vertex_key.size());
  std::vector<char> adjacent(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [u, v] : realization.edges)
    adjacent[u * n + v] = adjacent[v * n + u] = 1;

  std::mt19937 rng(seed == 0 ? 0x5eedu : seed);
  FlexVerifyReport report;

  for (int attempt = 0; attempt <= 3; ++attempt) {
    report = FlexVerifyReport{};
    report.perturb_retries = attempt;
    report.lengths_ok = true;
    report.injectivity_checked = realization.good;

    const RealizationFrame base = evaluate(realization, 0.0);
    std::vector<double> pair_min, pair_max;
    pair_min.assign(static_cast<std::size_t>(n) * n, 0);
    pair_max.assign(static_cast<std::size_t>(n) * n, 0);
    bool first_frame = true;
    bool coincidence = false;

    for (int k = 0; k < sample_count && !coincidence; ++k) {
      const double angle = 2.0 * std::numbers::pi * k / sample_count;
      const RealizationFrame frame = evaluate(realization, angle);
      for (std::size_t i = 0; i < frame.edge_lengths.size(); ++i) {
        const double drift = std::abs(frame.edge_lengths[i] - base.edge_lengths[i]);
        report.max_edge_drift = std::max(report.max_edge_drift, drift);
        if (drift >= tolerance) report.lengths_ok = false;
      }
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const double d = dist(frame.positions[u], frame.positions[v]);
          if (realization.good && d < 1e-9) {
            coincidence = true;
            report.failing_angle = angle;
          }
          if (adjacent[u * n + v]) continue;
          auto& lo = pair_min[u * n + v];
          auto& hi = pair_max[u * n + v];
          if (first_frame) {
            lo = hi = d;
          } else {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
          }
        }
      first_frame = false;
    }

    if (coincidence) {
      report.injective = false;
      if (attempt == 3) break;
      // Deterministic nudge of magnitude ~1e-3; lengths change but the flex
      // structure is anchor-independent.
      std::uniform_real_distribution<double> offset(-1e-3, 1e-3);
      for (auto& a : realization.red_anchor) {
        a.x += offset(rng);
        a.y += offset(rng);
      }
      for (auto& a : realization.blue_anchor) {
        a.x += offset(rng);
        a.y += offset(rng);
      }
      continue;
    }

    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (adjacent[u * n + v]) continue;
        report.max_pair_variation =
            std::max(report.max_pair_variation, pair_max[u * n + v] - pair_min[u * n + v]);
      }
    report.non_congruent = report.max_pair_variation > 10.0 * tolerance;
    report.injective = true;
    break;
  }

  report.passed = report.lengths_ok && report.non_congruent &&
                  (!report.injectivity_checked || report.injective);
  return report;
}

}  // namespace rigidcay
