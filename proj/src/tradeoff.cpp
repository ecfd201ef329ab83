#include "kneekit/tradeoff.hpp"

#include <algorithm>

namespace kneekit {
namespace {

void require_ranges(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges) {
  require_same_dimension(a, b);
  if (ranges.dimension() != a.size()) throw UsageError("ranges do not match the objective count");
}

}  // namespace

double gain(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges) {
  require_ranges(a, b, ranges);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::min(0.0, (a[i] - b[i]) / ranges.extent(i));
  return sum;
}

double loss(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges) {
  require_ranges(a, b, ranges);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::max(0.0, (a[i] - b[i]) / ranges.extent(i));
  return sum;
}

double utility(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges) {
  return gain(a, b, ranges) + loss(a, b, ranges);
}

KneeComparison knee_compare(ObjectiveView a, ObjectiveView b, const ObjectiveRanges& ranges) {
  const double u = utility(a, b, ranges);
  if (u < -kUtilityTolerance) return KneeComparison::Dominates;
  if (u > kUtilityTolerance) return KneeComparison::DominatedBy;
  return KneeComparison::NonDominated;
}

std::vector<double> accumulative_utility(const TradeoffSet& set, std::span<const std::size_t> knees) {
  if (knees.empty()) throw UsageError("accumulative utility needs at least one knee");
  std::vector<double> out(knees.size(), 0.0);
  for (std::size_t i = 0; i < knees.size(); ++i) {
    for (std::size_t j = 0; j < knees.size(); ++j) {
      if (i != j) out[i] += utility(set[knees[i]], set[knees[j]], set.ranges());
    }
  }
  return out;
}

std::vector<double> accumulative_utility_over(const TradeoffSet& set, std::span<const std::size_t> knees,
                                              const std::vector<IndexList>& neighbours) {
  if (knees.empty()) throw UsageError("accumulative utility needs at least one knee");
  std::vector<double> out(knees.size(), 0.0);
  for (std::size_t i = 0; i < knees.size(); ++i) {
    for (std::size_t j : neighbours.at(knees[i])) {
      if (j != knees[i]) out[i] += utility(set[knees[i]], set[j], set.ranges());
    }
  }
  return out;
}

}  // namespace kneekit
