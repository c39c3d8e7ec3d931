#pragma once

#include <optional>

#include "rigidcay/nac.hpp"

namespace rigidcay {

struct Vec2 {
  double x = 0;
  double y = 0;
};

/// One-parameter family of planar realizations built from a NAC-coloring:
///   position(v, angle) = Rot(angle) * red_anchor[r(v)] + blue_anchor[b(v)]
/// where r(v), b(v) are v's red/blue component indices. Red edges keep the
/// blue-anchor difference, blue edges the red-anchor difference, so every
/// edge length is independent of the angle.
struct ParamRealization {
  std::vector<Vec2> red_anchor;
  std::vector<Vec2> blue_anchor;
  std::vector<std::pair<int, int>> vertex_key;  // (red comp, blue comp), injective when good
  std::vector<Edge> edges;
  std::vector<EdgeColor> edge_colors;
  bool good = false;
};

struct RealizationFrame {
  double angle = 0;
  std::vector<Vec2> positions;
  std::vector<double> edge_lengths;  // parallel to ParamRealization::edges
};

/// Throws InvalidColoringError unless the coloring passes is_nac.
ParamRealization build_flex(const SimpleGraph& graph, const EdgeColoring& coloring);

RealizationFrame evaluate(const ParamRealization& realization, double angle);

/// Frames over the grid; the grid must be nonempty.
std::vector<RealizationFrame> export_frames(const ParamRealization& realization,
                                            const std::vector<double>& angle_grid);

struct FlexVerifyReport {
  bool passed = false;
  bool lengths_ok = false;
  double max_edge_drift = 0;
  bool non_congruent = false;
  double max_pair_variation = 0;  // over non-adjacent vertex pairs
  bool injectivity_checked = false;
  bool injective = true;
  int perturb_retries = 0;
  std::optional<double> failing_angle;
};

/// Samples sample_count angles uniformly over [0, 2pi) and checks
///   (a) every edge length stays within tolerance of its angle-0 value,
///   (b) some non-adjacent pair distance varies by more than 10*tolerance,
///   (c) for good colorings, every frame places vertices pairwise distinct.
/// A coincidence at a sampled angle triggers a seeded anchor perturbation of
/// magnitude 1e-3 and a retry, at most three times; the realization is
/// updated in place.
FlexVerifyReport verify_flex(ParamRealization& realization, const SimpleGraph& graph,
                             int sample_count, double tolerance, unsigned seed = 0);

}  // namespace rigidcay
