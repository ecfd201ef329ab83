#pragma once

// Reference knee identification methods used for comparison. Every method
// works on normalized objectives and returns the full set of tied winners.

#include "kneekit/core.hpp"

namespace kneekit {

/// Cone-domination angle in degrees; the off-diagonal trade-off weight is
/// tan((phi - 90) / 2).
class ConeParams {
 public:
  explicit ConeParams(double phi_degrees = 135.0);
  double phi() const { return phi_; }
  double slope() const { return slope_; }

 private:
  double phi_;
  double slope_;
};

struct EmuResult {
  IndexList knees;
  /// Expected marginal utility of every solution.
  std::vector<double> scores;
};

struct MuResult {
  /// mu(x, S) per solution; +inf when no solution is mutually non-dominated with it.
  std::vector<double> mu;
  /// Solutions whose mu is not exceeded by any member of their neighbourhood.
  IndexList knees;
};

/// Default EMU weight count: max(2, ceil(N / 6)).
std::size_t default_emu_weights(std::size_t n);

/// Solutions not dominated after mapping each point through the cone matrix
/// (1 on the diagonal, the cone slope elsewhere).
IndexList cone_knees(const NormalizedSet& set, const ConeParams& params = ConeParams{});
IndexList cone_knees(const TradeoffSet& set, const ConeParams& params = ConeParams{});

/// Expected marginal utility over a simplex lattice of about `weight_count`
/// weighted-sum scalarizations; argmax set.
EmuResult emu_knees(const NormalizedSet& set, std::size_t weight_count);
EmuResult emu_knees(const TradeoffSet& set, std::size_t weight_count);
EmuResult emu_knees(const TradeoffSet& set);

/// Two objectives only: interior point with the largest angle to its sorted
/// neighbours, measured on the side facing away from the ideal point.
IndexList reflex_angle_knee(const NormalizedSet& set);
IndexList reflex_angle_knee(const TradeoffSet& set);

/// Largest distance to the hyperplane sum(f) = 1 through the individual minima.
IndexList chim_knees(const NormalizedSet& set);
IndexList chim_knees(const TradeoffSet& set);

/// Smallest Manhattan distance to the ideal point (the origin after normalization).
IndexList mmd_knee(const NormalizedSet& set);
IndexList mmd_knee(const TradeoffSet& set);

/// Least improvement per unit deterioration against any incomparable partner;
/// knees are local maxima over the weight-vector neighbourhoods.
MuResult mu_metric(const TradeoffSet& set);

}  // namespace kneekit
