// OpenMP versions of the neighbourhood and knee-test loops. Each iteration
// only reads shared inputs and writes its own output slot; the per-item work
// is the same kernel the serial path calls, so results match bit for bit.

#include <omp.h>

#include <cstdint>

#include "kernels.hpp"
#include "kpitu_impl.hpp"

namespace kneekit {
namespace {

int thread_count(std::size_t workers) {
  if (workers == 0) throw UsageError("worker count must be at least 1");
  return static_cast<int>(workers);
}

}  // namespace

namespace parallel {

SubregionNeighbours subregion_neighbours(const WeightVectorSet& weights, std::size_t workers) {
  const auto n = static_cast<std::int64_t>(weights.size());
  SubregionNeighbours omega(weights.size());
#pragma omp parallel for num_threads(thread_count(workers)) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    omega[static_cast<std::size_t>(i)] = detail::neighbours_of_weight(weights, static_cast<std::size_t>(i));
  }
  return omega;
}

IndexList associate(const NormalizedSet& points, const WeightVectorSet& weights, std::size_t workers) {
  if (points.dimension() != weights.dimension()) throw UsageError("points and weights differ in dimension");
  const auto n = static_cast<std::int64_t>(points.size());
  IndexList k(points.size());
#pragma omp parallel num_threads(thread_count(workers))
  {
    std::vector<double> scratch(points.dimension());
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      k[s] = detail::nearest_weight(points[s], weights, scratch);
    }
  }
  return k;
}

NeighbourhoodIndex solution_neighbourhoods(const TradeoffSet& set, const WeightVectorSet& weights,
                                           std::size_t workers) {
  NeighbourhoodIndex index;
  index.subregion = associate(normalize(set), weights, workers);
  const auto omega = subregion_neighbours(weights, workers);
  const auto buckets = detail::bucket_by_subregion(index.subregion, weights.size());
  const auto n = static_cast<std::int64_t>(set.size());
  index.neighbours.resize(set.size());
#pragma omp parallel for num_threads(thread_count(workers)) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    index.neighbours[s] = detail::neighbours_of_solution(s, index.subregion, omega, buckets);
  }
  return index;
}

}  // namespace parallel

KneeResult identify_parallel(const TradeoffSet& set, std::size_t workers, const KpituOptions& options) {
  thread_count(workers);
  const IndexList kept = detail::nondominated_or_warn(set);
  const TradeoffSet filtered = set.subset(kept);
  const auto weights = das_dennis(filtered.dimension(), choose_resolution(filtered.dimension(), filtered.size()));
  NeighbourhoodIndex local = parallel::solution_neighbourhoods(filtered, weights, workers);

  const auto n = static_cast<std::int64_t>(filtered.size());
  std::vector<std::uint8_t> flag(filtered.size(), 0);
#pragma omp parallel for num_threads(thread_count(workers)) schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    flag[s] = detail::is_local_knee(filtered, s, local.neighbours[s]) ? 1 : 0;
  }
  IndexList knees;
  for (std::size_t i = 0; i < flag.size(); ++i) {
    if (flag[i] != 0) knees.push_back(i);
  }
  return detail::assemble(set, kept, filtered, std::move(local), knees, options);
}

}  // namespace kneekit
