#pragma once

// Knee benchmark families sampled along their analytical Pareto fronts,
// decision-space evaluation for the evolutionary engine, and a dense-grid
// oracle for the true knee locations.

#include <string>
#include <string_view>

#include "kneekit/core.hpp"

namespace kneekit {

enum class Family { DO2DK, DEB2DK, DEB3DK, CKP };

std::string_view family_name(Family family);
/// Case-insensitive; throws UsageError for unknown names.
Family parse_family(std::string_view name);

struct BenchmarkSpec {
  Family family = Family::DEB2DK;
  std::size_t objectives = 2;
  /// Knee-count parameter K.
  std::size_t knees = 1;
  /// Skew parameter s (DO2DK only).
  int skew = 0;
  /// Requested sample count; three-objective fronts use the largest square grid <= n.
  std::size_t samples = 200;

  void validate() const;

  /// Default sample counts: 200 points for two objectives, 676 for three.
  static BenchmarkSpec standard(Family family, std::size_t knees = 1, int skew = 0);
};

struct GroundTruth {
  TradeoffSet knees;
  /// Largest distance between grid-adjacent points of the dense front.
  double tolerance;
};

/// Evenly parameterized sample of the front (position variables on the grid
/// i/q, distance variables at their optimum), with dominated grid points dropped.
TradeoffSet sample_front(const BenchmarkSpec& spec);

/// Objective vector of a decision vector in [0,1]^n. Two-objective families
/// need n >= 1, DEB3DK needs n >= 2.
Point evaluate(const BenchmarkSpec& spec, std::span<const double> x);

/// Position variables that parameterize the front (1 for m=2, 2 for m=3).
std::size_t position_variables(const BenchmarkSpec& spec);

/// Knees of the dense front: Pareto-optimal interior grid points whose
/// normalized coordinate sum no grid neighbour undercuts. Independent of
/// spec.samples.
GroundTruth ground_truth(const BenchmarkSpec& spec);

/// Grid resolution of the dense oracle per position variable.
std::size_t dense_resolution(const BenchmarkSpec& spec);

}  // namespace kneekit
