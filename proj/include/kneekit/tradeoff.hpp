#pragma once

// Trade-off utility between two non-dominated solutions and the
// knee-dominance relation it induces.

#include "kneekit/core.hpp"

namespace kneekit {

/// Band around zero inside which a utility counts as "no preference".
inline constexpr double kUtilityTolerance = 1e-12;

enum class KneeComparison { Dominates, NonDominated, DominatedBy };

/// Sum of the negative parts of (a_i - b_i) / range_i. Never positive.
double gain(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges);

/// Sum of the positive parts of (a_i - b_i) / range_i. Never negative.
double loss(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges);

/// gain + loss. Negative means `a` is the better trade-off; antisymmetric in
/// its arguments and equal to the plain normalized difference sum.
double utility(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges);

KneeComparison knee_compare(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges);

/// Which partners a knee's accumulated utility is summed over.
enum class AccumulationScope {
  /// Every other knee in the set (the definition of accumulative utility).
  KneeSet,
  /// The knee's own solution neighbourhood; see `accumulative_utility_over`.
  Neighbourhood,
};

/// For each index in `knees`, the sum of utility(knee, other) over the other
/// knees. Ranges come from the whole of `set`, not from the knee subset.
std::vector<double> accumulative_utility(const TradeoffSet& set, std::span<const std::size_t> knees);

/// Variant summing over each knee's neighbourhood list instead of over the
/// knee set. `neighbours[i]` lists partners of solution i (indices into `set`).
std::vector<double> accumulative_utility_over(const TradeoffSet& set, std::span<const std::size_t> knees,
                                              const std::vector<IndexList>& neighbours);

}  // namespace kneekit
