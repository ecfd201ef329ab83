#pragma once

// Knee point identification by trade-off utility over weight-vector
// neighbourhoods, plus ranking of the identified knees.

#include <limits>

#include "kneekit/neighbourhood.hpp"
#include "kneekit/tradeoff.hpp"

namespace kneekit {

inline constexpr std::size_t kNoSubregion = std::numeric_limits<std::size_t>::max();

struct KpituOptions {
  AccumulationScope scope = AccumulationScope::KneeSet;
};

struct KneeResult {
  /// Indices into the input set, ascending by accumulative utility (best first).
  IndexList knees;
  /// Accumulative utility of each entry of `knees`.
  std::vector<double> accumulative;
  /// Neighbourhoods used for the knee test, indexed like the input set.
  /// Dominated inputs are excluded from identification: their subregion is
  /// kNoSubregion and their neighbour list is empty.
  NeighbourhoodIndex neighbourhood;
};

struct SortedKnees {
  IndexList knees;
  std::vector<double> accumulative;
};

/// Orders `knees` ascending by accumulative utility; stable under ties.
SortedKnees sort_knees(const TradeoffSet& set, std::span<const std::size_t> knees);

/// Same ordering, with utilities accumulated over each knee's neighbour list.
SortedKnees sort_knees(const TradeoffSet& set, std::span<const std::size_t> knees,
                       const std::vector<IndexList>& neighbours);

/// Serial reference implementation. A solution is a knee iff no member of its
/// neighbourhood knee-dominates it. Dominated inputs are dropped with a warning.
KneeResult identify(const TradeoffSet& set, const KpituOptions& options = {});

/// OpenMP implementation over `workers` threads; bit-identical to identify().
KneeResult identify_parallel(const TradeoffSet& set, std::size_t workers, const KpituOptions& options = {});

namespace parallel {

SubregionNeighbours subregion_neighbours(const WeightVectorSet& weights, std::size_t workers);
IndexList associate(const NormalizedSet& points, const WeightVectorSet& weights, std::size_t workers);
NeighbourhoodIndex solution_neighbourhoods(const TradeoffSet& set, const WeightVectorSet& weights,
                                           std::size_t workers);

}  // namespace parallel

}  // namespace kneekit
