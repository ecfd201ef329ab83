#include "kneekit/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "kneekit/neighbourhood.hpp"

namespace kneekit {
namespace {

constexpr double kTieTolerance = 1e-12;

IndexList argmax_all(const std::vector<double>& v) {
  const double best = *std::max_element(v.begin(), v.end());
  IndexList out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= best - kTieTolerance) out.push_back(i);
  }
  return out;
}

IndexList argmin_all(const std::vector<double>& v) {
  const double best = *std::min_element(v.begin(), v.end());
  IndexList out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= best + kTieTolerance) out.push_back(i);
  }
  return out;
}

std::vector<double> coordinate_sums(const NormalizedSet& set) {
  std::vector<double> sums(set.size(), 0.0);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (double v : set[i]) sums[i] += v;
  }
  return sums;
}

}  // namespace

ConeParams::ConeParams(double phi_degrees) : phi_(phi_degrees) {
  if (!(phi_degrees > 90.0 && phi_degrees < 180.0)) throw UsageError("cone angle must lie in (90, 180) degrees");
  slope_ = std::tan((phi_degrees - 90.0) / 2.0 * std::numbers::pi / 180.0);
}

std::size_t default_emu_weights(std::size_t n) { return std::max<std::size_t>(2, (n + 5) / 6); }

IndexList cone_knees(const NormalizedSet& set, const ConeParams& params) {
  const std::size_t m = set.dimension();
  std::vector<double> mapped(set.size() * m);
  for (std::size_t i = 0; i < set.size(); ++i) {
    double total = 0.0;
    for (double v : set[i]) total += v;
    // Row k of the cone matrix applied to f: f_k + a * (sum(f) - f_k).
    for (std::size_t k = 0; k < m; ++k) mapped[i * m + k] = set[i][k] + params.slope() * (total - set[i][k]);
  }
  return pareto_filter(TradeoffSet(m, std::move(mapped)));
}

IndexList cone_knees(const TradeoffSet& set, const ConeParams& params) { return cone_knees(normalize(set), params); }

EmuResult emu_knees(const NormalizedSet& set, std::size_t weight_count) {
  if (weight_count < 2) throw UsageError("EMU needs at least two weight vectors");
  const std::size_t m = set.dimension();
  const auto weights = das_dennis(m, choose_resolution(m, weight_count));
  EmuResult result;
  result.scores.assign(set.size(), 0.0);
  std::vector<double> value(set.size());
  for (std::size_t w = 0; w < weights.size(); ++w) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      value[i] = 0.0;
      for (std::size_t k = 0; k < m; ++k) value[i] += weights[w][k] * set[i][k];
    }
    const auto winners = argmin_all(value);
    // Only a unique minimizer earns a marginal utility.
    if (winners.size() != 1) continue;
    const std::size_t best = winners.front();
    double runner_up = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i != best) runner_up = std::min(runner_up, value[i]);
    }
    if (std::isfinite(runner_up)) result.scores[best] += runner_up - value[best];
  }
  result.knees = argmax_all(result.scores);
  return result;
}

EmuResult emu_knees(const TradeoffSet& set, std::size_t weight_count) {
  return emu_knees(normalize(set), weight_count);
}

EmuResult emu_knees(const TradeoffSet& set) { return emu_knees(set, default_emu_weights(set.size())); }

IndexList reflex_angle_knee(const NormalizedSet& set) {
  if (set.dimension() != 2) throw DimensionError("reflex angle is defined for two objectives only");
  if (set.size() < 3) throw UsageError("reflex angle needs at least three solutions");
  IndexList order(set.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return set[a][0] < set[b][0] || (set[a][0] == set[b][0] && set[a][1] > set[b][1]);
  });

  std::vector<double> angle(set.size(), -1.0);
  for (std::size_t p = 1; p + 1 < order.size(); ++p) {
    const auto l = set[order[p - 1]];
    const auto c = set[order[p]];
    const auto r = set[order[p + 1]];
    const double ax = l[0] - c[0], ay = l[1] - c[1];
    const double bx = r[0] - c[0], by = r[1] - c[1];
    const double inner = std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by);
    // Negative when c lies on the ideal-point side of the chord l -> r,
    // i.e. the corner bulges toward the ideal point and the outer angle is reflex.
    const double side = (r[0] - l[0]) * (c[1] - l[1]) - (r[1] - l[1]) * (c[0] - l[0]);
    angle[order[p]] = side < 0.0 ? 2.0 * std::numbers::pi - inner : inner;
  }
  return argmax_all(angle);
}

IndexList reflex_angle_knee(const TradeoffSet& set) { return reflex_angle_knee(normalize(set)); }

IndexList chim_knees(const NormalizedSet& set) {
  auto dist = coordinate_sums(set);
  const double scale = std::sqrt(static_cast<double>(set.dimension()));
  for (double& d : dist) d = std::abs(d - 1.0) / scale;
  return argmax_all(dist);
}

IndexList chim_knees(const TradeoffSet& set) { return chim_knees(normalize(set)); }

IndexList mmd_knee(const NormalizedSet& set) { return argmin_all(coordinate_sums(set)); }

IndexList mmd_knee(const TradeoffSet& set) { return mmd_knee(normalize(set)); }

MuResult mu_metric(const TradeoffSet& set) {
  if (set.size() < 2) throw UsageError("mu metric needs at least two solutions");
  const auto& ranges = set.ranges();
  const std::size_t m = set.dimension();
  MuResult result;
  result.mu.assign(set.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j || dominates(set[i], set[j]) || dominates(set[j], set[i])) continue;
      double improvement = 0.0;
      double deterioration = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        const double d = (set[j][k] - set[i][k]) / ranges.extent(k);
        if (d > 0.0) improvement += d;
        else deterioration -= d;
      }
      if (deterioration == 0.0) continue;
      result.mu[i] = std::min(result.mu[i], improvement / deterioration);
    }
  }
  const auto hood = solution_neighbourhoods(set);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const bool local_max = std::all_of(hood.neighbours[i].begin(), hood.neighbours[i].end(),
                                       [&](std::size_t j) { return result.mu[i] >= result.mu[j] - kTieTolerance; });
    if (local_max) result.knees.push_back(i);
  }
  return result;
}

}  // namespace kneekit
