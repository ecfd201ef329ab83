#include "kneekit/metrics.hpp"

#include <cmath>
#include <limits>

namespace kneekit {

double indicator(const std::vector<Point>& found, const std::vector<Point>& truth) {
  if (found.empty() || truth.empty()) throw UsageError("indicator needs nonempty identified and true sets");
  double total = 0.0;
  for (const auto& s : found) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& t : truth) {
      require_same_dimension(s, t);
      double d = 0.0;
      for (std::size_t k = 0; k < s.size(); ++k) d += (s[k] - t[k]) * (s[k] - t[k]);
      nearest = std::min(nearest, d);
    }
    total += std::sqrt(nearest);
  }
  return total / static_cast<double>(found.size());
}

double indicator(const TradeoffSet& found, const TradeoffSet& truth) {
  return indicator(found.rows(), truth.rows());
}

}  // namespace kneekit
