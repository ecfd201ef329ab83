#include "kneekit/neighbourhood.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "kernels.hpp"

namespace kneekit {

namespace detail {

bool to_unit(ObjectiveView v, std::span<double> out) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return false;
  }
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / norm;
  return true;
}

double unit_angle(ObjectiveView u, ObjectiveView v) {
  double diff = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    diff += (u[i] - v[i]) * (u[i] - v[i]);
    sum += (u[i] + v[i]) * (u[i] + v[i]);
  }
  return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

IndexList neighbours_of_weight(const WeightVectorSet& weights, std::size_t i) {
  const std::size_t n = weights.size();
  std::vector<double> angle(n, std::numeric_limits<double>::infinity());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i) continue;
    angle[j] = unit_angle(weights.unit(i), weights.unit(j));
    best = std::min(best, angle[j]);
  }
  IndexList omega;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == i || angle[j] <= best + kAngleTolerance) omega.push_back(j);
  }
  return omega;
}

std::size_t nearest_weight(ObjectiveView point, const WeightVectorSet& weights, std::span<double> scratch) {
  // The zero vector has no direction: every weight is at angle 0 and the
  // lowest index wins.
  if (!to_unit(point, scratch)) return 0;
  const ObjectiveView unit(scratch.data(), scratch.size());
  std::vector<double> angle(weights.size());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < weights.size(); ++j) {
    angle[j] = unit_angle(unit, weights.unit(j));
    best = std::min(best, angle[j]);
  }
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (angle[j] <= best + kAngleTolerance) return j;
  }
  return 0;
}

std::vector<IndexList> bucket_by_subregion(const IndexList& subregion, std::size_t weight_count) {
  std::vector<IndexList> buckets(weight_count);
  for (std::size_t i = 0; i < subregion.size(); ++i) buckets[subregion[i]].push_back(i);
  return buckets;
}

IndexList neighbours_of_solution(std::size_t i, const IndexList& subregion, const SubregionNeighbours& omega,
                                 const std::vector<IndexList>& buckets) {
  IndexList psi;
  for (std::size_t k : omega[subregion[i]]) {
    for (std::size_t j : buckets[k]) {
      if (j != i) psi.push_back(j);
    }
  }
  std::sort(psi.begin(), psi.end());
  return psi;
}

bool is_local_knee(const TradeoffSet& set, std::size_t i, const IndexList& neighbours) {
  for (std::size_t j : neighbours) {
    if (utility(set[i], set[j], set.ranges()) > kUtilityTolerance) return false;
  }
  return true;
}

}  // namespace detail

WeightVectorSet::WeightVectorSet(std::size_t dimension, std::size_t resolution, std::vector<double> values)
    : dimension_(dimension), resolution_(resolution), values_(std::move(values)), units_(values_.size()) {
  for (std::size_t i = 0; i < size(); ++i) {
    detail::to_unit((*this)[i], {units_.data() + i * dimension_, dimension_});
  }
}

std::uint64_t lattice_size(std::size_t m, std::size_t resolution) {
  if (m < 1) return 0;
  // C(H+m-1, k) built incrementally with k = min(m-1, H); each partial
  // product is itself a binomial coefficient, so the division is exact.
  const std::uint64_t n = resolution + m - 1;
  const std::uint64_t k = std::min<std::uint64_t>(m - 1, resolution);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (c > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    c = c * num / i;
  }
  return c;
}

WeightVectorSet das_dennis(std::size_t m, std::size_t resolution) {
  if (m < 2) throw UsageError("weight vectors need at least two objectives");
  if (resolution == 0) throw UsageError("lattice resolution must be at least 1");
  const std::uint64_t count = lattice_size(m, resolution);
  if (count > (std::uint64_t{1} << 26)) throw UsageError("weight lattice too large");

  std::vector<double> values;
  values.reserve(count * m);
  std::vector<std::size_t> parts(m, 0);
  // Depth-first over the first m-1 components, ascending, which yields
  // lexicographic order; the last component takes what remains.
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t left) -> void {
    if (depth == m - 1) {
      parts[depth] = left;
      for (std::size_t c : parts) values.push_back(static_cast<double>(c) / static_cast<double>(resolution));
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      parts[depth] = c;
      self(self, depth + 1, left - c);
    }
  };
  recurse(recurse, 0, resolution);
  return WeightVectorSet(m, resolution, std::move(values));
}

std::size_t choose_resolution(std::size_t m, std::size_t n) {
  if (n == 0) throw UsageError("set size must be at least 1");
  if (m < 2) throw UsageError("weight vectors need at least two objectives");
  if (lattice_size(m, 1) > n) {
    warn(std::to_string(n) + " solutions is fewer than the " + std::to_string(m) +
         " weight vectors of the coarsest lattice");
    return 1;
  }
  std::size_t h = 1;
  while (lattice_size(m, h + 1) <= n) ++h;
  return h;
}

double acute_angle(ObjectiveView u, ObjectiveView v) {
  require_same_dimension(u, v);
  std::vector<double> uu(u.size());
  std::vector<double> vv(v.size());
  if (!detail::to_unit(u, uu) || !detail::to_unit(v, vv)) return 0.0;
  return detail::unit_angle(uu, vv);
}

SubregionNeighbours subregion_neighbours(const WeightVectorSet& weights) {
  SubregionNeighbours omega(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) omega[i] = detail::neighbours_of_weight(weights, i);
  return omega;
}

IndexList associate(const NormalizedSet& points, const WeightVectorSet& weights) {
  if (points.dimension() != weights.dimension()) throw UsageError("points and weights differ in dimension");
  IndexList k(points.size());
  std::vector<double> scratch(points.dimension());
  for (std::size_t i = 0; i < points.size(); ++i) k[i] = detail::nearest_weight(points[i], weights, scratch);
  return k;
}

NeighbourhoodIndex solution_neighbourhoods(const TradeoffSet& set, const WeightVectorSet& weights) {
  NeighbourhoodIndex index;
  index.subregion = associate(normalize(set), weights);
  const auto omega = subregion_neighbours(weights);
  const auto buckets = detail::bucket_by_subregion(index.subregion, weights.size());
  index.neighbours.resize(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    index.neighbours[i] = detail::neighbours_of_solution(i, index.subregion, omega, buckets);
  }
  return index;
}

NeighbourhoodIndex solution_neighbourhoods(const TradeoffSet& set) {
  return solution_neighbourhoods(set, das_dennis(set.dimension(), choose_resolution(set.dimension(), set.size())));
}

}  // namespace kneekit
