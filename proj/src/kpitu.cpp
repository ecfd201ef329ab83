#include "kneekit/kpitu.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>

#include "kernels.hpp"
#include "kpitu_impl.hpp"

namespace kneekit {
namespace {

SortedKnees order_by(std::span<const std::size_t> knees, std::vector<double> values) {
  IndexList order(knees.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  SortedKnees out;
  for (std::size_t o : order) {
    out.knees.push_back(knees[o]);
    out.accumulative.push_back(values[o]);
  }
  return out;
}

}  // namespace

SortedKnees sort_knees(const TradeoffSet& set, std::span<const std::size_t> knees) {
  return order_by(knees, accumulative_utility(set, knees));
}

SortedKnees sort_knees(const TradeoffSet& set, std::span<const std::size_t> knees,
                       const std::vector<IndexList>& neighbours) {
  return order_by(knees, accumulative_utility_over(set, knees, neighbours));
}

namespace detail {

IndexList nondominated_or_warn(const TradeoffSet& set) {
  auto kept = pareto_filter(set);
  if (kept.size() != set.size()) {
    warn("dropped " + std::to_string(set.size() - kept.size()) +
         " dominated solution(s) before knee identification");
  }
  return kept;
}

KneeResult assemble(const TradeoffSet& set, const IndexList& kept, const TradeoffSet& filtered,
                    NeighbourhoodIndex local, const IndexList& knees, const KpituOptions& options) {
  const auto sorted = options.scope == AccumulationScope::KneeSet
                          ? sort_knees(filtered, knees)
                          : sort_knees(filtered, knees, local.neighbours);
  KneeResult result;
  result.accumulative = sorted.accumulative;
  for (std::size_t k : sorted.knees) result.knees.push_back(kept[k]);

  result.neighbourhood.subregion.assign(set.size(), kNoSubregion);
  result.neighbourhood.neighbours.assign(set.size(), {});
  for (std::size_t i = 0; i < kept.size(); ++i) {
    result.neighbourhood.subregion[kept[i]] = local.subregion[i];
    auto& out = result.neighbourhood.neighbours[kept[i]];
    for (std::size_t j : local.neighbours[i]) out.push_back(kept[j]);
  }
  return result;
}

}  // namespace detail

KneeResult identify(const TradeoffSet& set, const KpituOptions& options) {
  const IndexList kept = detail::nondominated_or_warn(set);
  const TradeoffSet filtered = set.subset(kept);
  const auto weights = das_dennis(filtered.dimension(), choose_resolution(filtered.dimension(), filtered.size()));
  NeighbourhoodIndex local = solution_neighbourhoods(filtered, weights);

  IndexList knees;
  for (std::size_t i = 0; i < filtered.size(); ++i) {
    if (detail::is_local_knee(filtered, i, local.neighbours[i])) knees.push_back(i);
  }
  return detail::assemble(set, kept, filtered, std::move(local), knees, options);
}

}  // namespace kneekit
