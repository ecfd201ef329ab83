#include <benchmark/benchmark.h>

#include <random>

#include "kneekit/core.hpp"
#include "kneekit/kpitu.hpp"

namespace {

// Points on the unit p-sphere are mutually non-dominated, so every point survives filtering.
kneekit::TradeoffSet sphere(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(17);
  std::exponential_distribution<double> draw(1.0);
  std::vector<kneekit::Point> rows;
  for (std::size_t i = 0; i < n; ++i) {
    kneekit::Point x(m);
    double norm = 0.0;
    for (auto& v : x) {
      v = draw(rng);
      norm += v * v;
    }
    for (auto& v : x) v /= std::sqrt(norm);
    rows.push_back(x);
  }
  return kneekit::TradeoffSet::from_rows(rows);
}

void Serial(benchmark::State& state) {
  const auto set = sphere(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const kneekit::QuietWarnings quiet;
  for (auto _ : state) benchmark::DoNotOptimize(kneekit::identify(set));
}

void Parallel(benchmark::State& state) {
  const auto set = sphere(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const kneekit::QuietWarnings quiet;
  for (auto _ : state) benchmark::DoNotOptimize(kneekit::identify_parallel(set, static_cast<std::size_t>(state.range(2))));
}

}  // namespace

BENCHMARK(Serial)->ArgsProduct({{200, 1000, 4000}, {2, 3, 5}})->Unit(benchmark::kMillisecond);
BENCHMARK(Parallel)->ArgsProduct({{200, 1000, 4000}, {2, 3, 5}, {2, 4, 8}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
