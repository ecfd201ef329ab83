#pragma once

// Simplex-lattice weight vectors, the subregions they induce, and the
// per-solution neighbourhoods used by knee identification.

#include <cstdint>

#include "kneekit/core.hpp"

namespace kneekit {

/// Angles closer than this are considered tied.
inline constexpr double kAngleTolerance = 1e-12;

/// Uniform lattice on the unit simplex: every component is a multiple of
/// 1/H. Vectors are kept in lexicographic generation order.
class WeightVectorSet {
 public:
  WeightVectorSet(std::size_t dimension, std::size_t resolution, std::vector<double> values);

  std::size_t size() const { return values_.size() / dimension_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t resolution() const { return resolution_; }
  ObjectiveView operator[](std::size_t i) const { return {values_.data() + i * dimension_, dimension_}; }
  /// Same vector scaled to unit Euclidean length.
  ObjectiveView unit(std::size_t i) const { return {units_.data() + i * dimension_, dimension_}; }

 private:
  std::size_t dimension_;
  std::size_t resolution_;
  std::vector<double> values_;
  std::vector<double> units_;
};

/// Per-subregion neighbour lists, sorted ascending, each containing its own index.
using SubregionNeighbours = std::vector<IndexList>;

struct NeighbourhoodIndex {
  /// Subregion each solution is associated with.
  IndexList subregion;
  /// Neighbour solutions of each solution, ascending, never containing itself.
  std::vector<IndexList> neighbours;
};

/// C(H+m-1, m-1), saturating at UINT64_MAX.
std::uint64_t lattice_size(std::size_t m, std::size_t resolution);

WeightVectorSet das_dennis(std::size_t m, std::size_t resolution);

/// Largest H >= 1 whose lattice has at most `n` vectors; 1 if even H=1 is too large.
std::size_t choose_resolution(std::size_t m, std::size_t n);

/// Angle between two vectors in radians; 0 if either is the zero vector.
double acute_angle(ObjectiveView u, ObjectiveView v);

/// Omega^i = {i} plus every other weight at minimum angle from w^i.
SubregionNeighbours subregion_neighbours(const WeightVectorSet& weights);

/// Index of the weight at minimum angle from each normalized point; ties go
/// to the lowest weight index.
IndexList associate(const NormalizedSet& points, const WeightVectorSet& weights);

/// Psi^i: all solutions associated with a subregion in Omega^{k(i)}, except i.
NeighbourhoodIndex solution_neighbourhoods(const TradeoffSet& set, const WeightVectorSet& weights);

/// Same, with the lattice sized by choose_resolution(m, N).
NeighbourhoodIndex solution_neighbourhoods(const TradeoffSet& set);

}  // namespace kneekit
