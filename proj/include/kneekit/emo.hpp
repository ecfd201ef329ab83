#pragma once

// NSGA-II with KPITU replacing crowding distance in environmental selection.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "kneekit/benchmarks.hpp"
#include "kneekit/core.hpp"

namespace kneekit {

struct Individual {
  Point genotype;
  Point objectives;
  /// Non-domination level, 1 for the first front; 0 until sorted.
  std::size_t level = 0;
};

/// Seeded source of uniform draws in [0,1) with 53-bit resolution.
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform index in [0, n).
  std::size_t below(std::size_t n) { return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n))); }

 private:
  std::mt19937_64 engine_;
};

struct Problem {
  std::vector<double> lower;
  std::vector<double> upper;
  /// Must be pure: it is called concurrently when evaluation is parallel.
  std::function<Point(std::span<const double>)> evaluate;
  /// True knees for the I(S) trace; no trace without them.
  std::optional<TradeoffSet> truth;

  std::size_t variables() const { return lower.size(); }
};

/// Benchmark family over [0,1]^variables, with the dense-oracle truth attached when requested.
Problem benchmark_problem(const BenchmarkSpec& spec, std::size_t variables, bool with_truth = true);

enum class Selection { Kpitu, Crowding };

struct EvoConfig {
  std::size_t population = 100;
  std::size_t generations = 300;
  double crossover_probability = 0.9;
  double crossover_index = 20.0;
  /// Per-variable; 1/n when unset.
  std::optional<double> mutation_probability;
  double mutation_index = 20.0;
  std::uint64_t seed = 42;
  Selection selection = Selection::Kpitu;
  /// Threads for objective evaluation and knee identification.
  std::size_t workers = 1;

  void validate() const;
  double mutation_rate(std::size_t variables) const;
};

/// Levels F1, F2, ... as index lists, each ascending. Writes the 1-based
/// level into each individual.
std::vector<IndexList> fast_nondominated_sort(std::vector<Individual>& population);
std::vector<IndexList> fast_nondominated_sort(const std::vector<Point>& objectives);

/// SBX on consecutive parent pairs, then polynomial mutation. Offspring
/// genotypes are clamped to the problem bounds and left unevaluated.
std::vector<Individual> variation(const std::vector<Individual>& parents, const Problem& problem,
                                  const EvoConfig& config, Random& rng);

struct SelectionOutcome {
  /// Indices into the merged population, in acceptance order.
  IndexList survivors;
  /// Slots filled without a knee pass because the last level ran dry.
  std::size_t backfilled = 0;
  /// Number of identify() calls on the last level.
  std::size_t kpitu_passes = 0;
};

/// Whole levels while they fit, then repeated knee extraction on the last
/// level. `merged` must already carry levels from fast_nondominated_sort.
SelectionOutcome environmental_selection_kpitu(const std::vector<Individual>& merged, std::size_t n,
                                               std::size_t workers = 1);

/// Canonical NSGA-II truncation by crowding distance, for reference runs.
SelectionOutcome environmental_selection_crowding(const std::vector<Individual>& merged, std::size_t n);

/// Crowding distance of each member of `front` (infinite at objective extremes).
std::vector<double> crowding_distance(const std::vector<Individual>& population, const IndexList& front);

struct RunResult {
  std::vector<Individual> population;
  /// I(S) of the first level against the problem's truth, one entry per
  /// generation starting with the initial population; empty without truth.
  std::vector<double> trace;
  std::size_t backfilled = 0;
};

RunResult run(const Problem& problem, const EvoConfig& config);

/// Objective vectors of the first non-domination level.
std::vector<Point> first_front(const std::vector<Individual>& population);

}  // namespace kneekit
