#include "kneekit/emo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kneekit/kpitu.hpp"
#include "kneekit/metrics.hpp"

namespace kneekit {
namespace {

void evaluate_all(std::vector<Individual>& population, const Problem& problem, std::size_t workers) {
  const auto count = static_cast<std::ptrdiff_t>(population.size());
  std::vector<std::string> failures(population.size());
#pragma omp parallel for num_threads(static_cast<int>(workers)) schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    auto& ind = population[static_cast<std::size_t>(i)];
    try {
      ind.objectives = problem.evaluate(ind.genotype);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (!failures[i].empty()) {
      throw std::runtime_error("evaluation of individual " + std::to_string(i) + " failed: " + failures[i]);
    }
  }
}

// Deb et al. (2002) simulated binary crossover for one variable, bounded form.
void sbx_gene(double& a, double& b, double lo, double hi, double eta, Random& rng) {
  if (rng.uniform() > 0.5 || std::abs(a - b) <= 1e-14) return;
  const double y1 = std::min(a, b);
  const double y2 = std::max(a, b);
  auto spread = [&](double beta, double u) {
    const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
    return u <= 1.0 / alpha ? std::pow(u * alpha, 1.0 / (eta + 1.0))
                            : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
  };
  const double u = rng.uniform();
  const double c1 = 0.5 * ((y1 + y2) - spread(1.0 + 2.0 * (y1 - lo) / (y2 - y1), u) * (y2 - y1));
  const double c2 = 0.5 * ((y1 + y2) + spread(1.0 + 2.0 * (hi - y2) / (y2 - y1), u) * (y2 - y1));
  a = std::clamp(c1, lo, hi);
  b = std::clamp(c2, lo, hi);
  if (rng.uniform() <= 0.5) std::swap(a, b);
}

void polynomial_mutation(double& y, double lo, double hi, double eta, Random& rng) {
  if (hi <= lo) return;
  const double d1 = (y - lo) / (hi - lo);
  const double d2 = (hi - y) / (hi - lo);
  const double u = rng.uniform();
  const double power = 1.0 / (eta + 1.0);
  double dq;
  if (u <= 0.5) {
    const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
    dq = std::pow(v, power) - 1.0;
  } else {
    const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
    dq = 1.0 - std::pow(v, power);
  }
  y = std::clamp(y + dq * (hi - lo), lo, hi);
}

// Binary tournament on non-domination level; the first draw wins ties.
std::vector<Individual> mating_pool(const std::vector<Individual>& population, Random& rng) {
  std::vector<Individual> pool;
  pool.reserve(population.size());
  for (std::size_t k = 0; k < population.size(); ++k) {
    const auto& a = population[rng.below(population.size())];
    const auto& b = population[rng.below(population.size())];
    pool.push_back(b.level < a.level ? b : a);
  }
  return pool;
}

}  // namespace

Problem benchmark_problem(const BenchmarkSpec& spec, std::size_t variables, bool with_truth) {
  spec.validate();
  if (variables < position_variables(spec)) {
    throw UsageError(std::string(family_name(spec.family)) + " needs at least " +
                     std::to_string(position_variables(spec)) + " decision variables");
  }
  Problem problem{std::vector<double>(variables, 0.0), std::vector<double>(variables, 1.0),
                  [spec](std::span<const double> x) { return evaluate(spec, x); }, std::nullopt};
  if (with_truth) problem.truth = ground_truth(spec).knees;
  return problem;
}

void EvoConfig::validate() const {
  if (population < 2 || population % 2 != 0) throw UsageError("population size must be even and at least 2");
  auto probability = [](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError(std::string(what) + " must lie in [0,1]");
  };
  probability(crossover_probability, "crossover probability");
  if (mutation_probability) probability(*mutation_probability, "mutation probability");
  if (!(crossover_index >= 0.0) || !(mutation_index >= 0.0)) throw UsageError("distribution indices must be non-negative");
  if (workers == 0) throw UsageError("worker count must be at least 1");
}

double EvoConfig::mutation_rate(std::size_t variables) const {
  return mutation_probability.value_or(1.0 / static_cast<double>(variables));
}

std::vector<IndexList> fast_nondominated_sort(const std::vector<Point>& objectives) {
  const std::size_t n = objectives.size();
  std::vector<IndexList> dominated(n);
  std::vector<std::size_t> counter(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(objectives[i], objectives[j])) {
        dominated[i].push_back(j);
        ++counter[j];
      } else if (dominates(objectives[j], objectives[i])) {
        dominated[j].push_back(i);
        ++counter[i];
      }
    }
  }
  std::vector<IndexList> levels;
  IndexList current;
  for (std::size_t i = 0; i < n; ++i) {
    if (counter[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    IndexList next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated[i]) {
        if (--counter[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(current));
    current = std::move(next);
  }
  return levels;
}

std::vector<IndexList> fast_nondominated_sort(std::vector<Individual>& population) {
  std::vector<Point> objectives;
  objectives.reserve(population.size());
  for (const auto& ind : population) objectives.push_back(ind.objectives);
  auto levels = fast_nondominated_sort(objectives);
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (std::size_t i : levels[l]) population[i].level = l + 1;
  }
  return levels;
}

std::vector<Individual> variation(const std::vector<Individual>& parents, const Problem& problem,
                                  const EvoConfig& config, Random& rng) {
  const std::size_t n = problem.variables();
  const double pm = config.mutation_rate(n);
  std::vector<Individual> offspring;
  offspring.reserve(parents.size());
  for (std::size_t p = 0; p + 1 < parents.size(); p += 2) {
    Point a = parents[p].genotype;
    Point b = parents[p + 1].genotype;
    if (rng.uniform() < config.crossover_probability) {
      for (std::size_t k = 0; k < n; ++k) sbx_gene(a[k], b[k], problem.lower[k], problem.upper[k], config.crossover_index, rng);
    }
    for (Point* child : {&a, &b}) {
      for (std::size_t k = 0; k < n; ++k) {
        if (rng.uniform() < pm) polynomial_mutation((*child)[k], problem.lower[k], problem.upper[k], config.mutation_index, rng);
      }
      offspring.push_back({std::move(*child), {}, 0});
    }
  }
  if (parents.size() % 2 == 1) offspring.push_back({parents.back().genotype, {}, 0});
  return offspring;
}

SelectionOutcome environmental_selection_kpitu(const std::vector<Individual>& merged, std::size_t n,
                                               std::size_t workers) {
  std::vector<IndexList> levels(1);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const std::size_t level = merged[i].level;
    if (level == 0) throw UsageError("population must be sorted into levels before selection");
    if (levels.size() <= level) levels.resize(level + 1);
    levels[level].push_back(i);
  }

  SelectionOutcome out;
  std::size_t l = 1;
  while (l < levels.size() && out.survivors.size() + levels[l].size() <= n) {
    out.survivors.insert(out.survivors.end(), levels[l].begin(), levels[l].end());
    ++l;
  }
  if (out.survivors.size() == n || l >= levels.size()) return out;

  const QuietWarnings quiet;  // tiny remainders always trip the coarse-lattice fallback
  IndexList remaining = levels[l];
  IndexList last_knees;
  while (out.survivors.size() < n) {
    if (remaining.empty()) {
      // Unreachable with a nonempty knee set each pass; kept as a guard.
      warn("last non-domination level exhausted before the population filled; backfilling");
      for (std::size_t i = 0; out.survivors.size() < n && i < last_knees.size(); ++i) {
        out.survivors.push_back(last_knees[i]);
        ++out.backfilled;
      }
      break;
    }
    std::vector<Point> rows;
    for (std::size_t i : remaining) rows.push_back(merged[i].objectives);
    const auto knees = identify_parallel(TradeoffSet::from_rows(rows), workers).knees;
    ++out.kpitu_passes;
    const std::size_t slots = n - out.survivors.size();
    if (knees.empty()) {
      warn("knee identification returned nothing; backfilling from the last level");
      for (std::size_t i = 0; i < slots; ++i) out.survivors.push_back(remaining[i]);
      out.backfilled += slots;
      break;
    }
    last_knees.clear();
    for (std::size_t k = 0; k < std::min(slots, knees.size()); ++k) {
      out.survivors.push_back(remaining[knees[k]]);
      last_knees.push_back(remaining[knees[k]]);
    }
    if (knees.size() >= slots) break;
    std::vector<bool> taken(remaining.size(), false);
    for (std::size_t k : knees) taken[k] = true;
    IndexList rest;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (!taken[i]) rest.push_back(remaining[i]);
    }
    remaining = std::move(rest);
  }
  return out;
}

std::vector<double> crowding_distance(const std::vector<Individual>& population, const IndexList& front) {
  const std::size_t size = front.size();
  std::vector<double> distance(size, 0.0);
  if (size == 0) return distance;
  const std::size_t m = population[front[0]].objectives.size();
  const double inf = std::numeric_limits<double>::infinity();
  IndexList order(size);
  for (std::size_t k = 0; k < m; ++k) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto value = [&](std::size_t o) { return population[front[o]].objectives[k]; };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
    const double span = value(order.back()) - value(order.front());
    distance[order.front()] = inf;
    distance[order.back()] = inf;
    if (span <= 0.0) continue;
    for (std::size_t r = 1; r + 1 < size; ++r) {
      distance[order[r]] += (value(order[r + 1]) - value(order[r - 1])) / span;
    }
  }
  return distance;
}

SelectionOutcome environmental_selection_crowding(const std::vector<Individual>& merged, std::size_t n) {
  std::vector<IndexList> levels(1);
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (levels.size() <= merged[i].level) levels.resize(merged[i].level + 1);
    levels[merged[i].level].push_back(i);
  }
  SelectionOutcome out;
  for (std::size_t l = 1; l < levels.size() && out.survivors.size() < n; ++l) {
    if (out.survivors.size() + levels[l].size() <= n) {
      out.survivors.insert(out.survivors.end(), levels[l].begin(), levels[l].end());
      continue;
    }
    const auto distance = crowding_distance(merged, levels[l]);
    IndexList order(levels[l].size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return distance[a] > distance[b]; });
    for (std::size_t r = 0; out.survivors.size() < n; ++r) out.survivors.push_back(levels[l][order[r]]);
  }
  return out;
}

std::vector<Point> first_front(const std::vector<Individual>& population) {
  std::vector<Point> objectives;
  for (const auto& ind : population) objectives.push_back(ind.objectives);
  std::vector<Point> front;
  const auto levels = fast_nondominated_sort(objectives);
  for (std::size_t i : levels.front()) front.push_back(objectives[i]);
  return front;
}

RunResult run(const Problem& problem, const EvoConfig& config) {
  config.validate();
  if (problem.variables() == 0 || problem.upper.size() != problem.variables() || !problem.evaluate) {
    throw UsageError("problem needs matching bounds and an evaluation function");
  }
  Random rng(config.seed);
  RunResult result;
  auto& population = result.population;
  for (std::size_t i = 0; i < config.population; ++i) {
    Point x(problem.variables());
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = problem.lower[k] + rng.uniform() * (problem.upper[k] - problem.lower[k]);
    population.push_back({std::move(x), {}, 0});
  }
  evaluate_all(population, problem, config.workers);
  fast_nondominated_sort(population);

  auto record = [&] {
    if (problem.truth) result.trace.push_back(indicator(first_front(population), problem.truth->rows()));
  };
  record();
  for (std::size_t gen = 0; gen < config.generations; ++gen) {
    auto offspring = variation(mating_pool(population, rng), problem, config, rng);
    evaluate_all(offspring, problem, config.workers);
    std::vector<Individual> merged = std::move(population);
    merged.insert(merged.end(), std::make_move_iterator(offspring.begin()), std::make_move_iterator(offspring.end()));
    fast_nondominated_sort(merged);
    const auto outcome = config.selection == Selection::Kpitu
                             ? environmental_selection_kpitu(merged, config.population, config.workers)
                             : environmental_selection_crowding(merged, config.population);
    result.backfilled += outcome.backfilled;
    population.clear();
    for (std::size_t i : outcome.survivors) population.push_back(merged[i]);
    fast_nondominated_sort(population);
    record();
  }
  return result;
}

}  // namespace kneekit
