#pragma once

#include "kneekit/core.hpp"

namespace kneekit {

/// Mean Euclidean distance from each point of `found` to its nearest point
/// in `truth`, in raw objective space. Throws UsageError if either set is
/// empty or the dimensions differ.
double indicator(const TradeoffSet& found, const TradeoffSet& truth);
double indicator(const std::vector<Point>& found, const std::vector<Point>& truth);

}  // namespace kneekit
