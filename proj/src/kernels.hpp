#pragma once

// Per-item kernels shared by the serial reference path and the OpenMP path,
// so both produce bit-identical results.

#include "kneekit/neighbourhood.hpp"
#include "kneekit/tradeoff.hpp"

namespace kneekit::detail {

/// Angle between two unit vectors (2 atan2(|u-v|, |u+v|), accurate near 0 and pi).
double unit_angle(ObjectiveView u, ObjectiveView v);

/// Scales `v` to unit length into `out`; returns false for the zero vector.
bool to_unit(ObjectiveView v, std::span<double> out);

/// Omega^i for weight i.
IndexList neighbours_of_weight(const WeightVectorSet& weights, std::size_t i);

/// Subregion of one normalized point.
std::size_t nearest_weight(ObjectiveView point, const WeightVectorSet& weights, std::span<double> scratch);

/// Members of each subregion, ascending.
std::vector<IndexList> bucket_by_subregion(const IndexList& subregion, std::size_t weight_count);

/// Psi^i from the subregion buckets.
IndexList neighbours_of_solution(std::size_t i, const IndexList& subregion, const SubregionNeighbours& omega,
                                 const std::vector<IndexList>& buckets);

/// No neighbour knee-dominates solution i.
bool is_local_knee(const TradeoffSet& set, std::size_t i, const IndexList& neighbours);

}  // namespace kneekit::detail
