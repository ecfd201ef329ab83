#pragma once

// Seeded generators and an independent brute-force knee identifier shared by
// the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "kneekit/core.hpp"

namespace testkit {

using kneekit::IndexList;
using kneekit::Point;

struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine); }
  std::mt19937_64 engine;
};

inline std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t m) {
  std::vector<Point> rows(n, Point(m));
  for (auto& r : rows)
    for (auto& v : r) v = rng.uniform();
  return rows;
}

// Points with ||x||_p = 1 in the positive orthant are mutually non-dominated
// for any p > 0: p < 1 bulges toward the origin, p > 1 away from it.
inline Point on_p_sphere(Rng& rng, std::size_t m, double p) {
  Point x(m);
  double total = 0.0;
  for (auto& v : x) {
    v = -std::log(1.0 - rng.uniform());  // exponential draws give a uniform simplex point
    total += v;
  }
  for (auto& v : x) v = std::pow(v / total, 1.0 / p);
  return x;
}

inline std::vector<Point> nondominated_set(Rng& rng, std::size_t n, std::size_t m, double p) {
  std::vector<Point> rows;
  while (rows.size() < n) rows.push_back(on_p_sphere(rng, m, p));
  return rows;
}

// Front with ripples: radius varies with the angle, so several local knees appear.
inline std::vector<Point> rippled_front(Rng& rng, std::size_t n, std::size_t ripples) {
  std::vector<Point> rows;
  const double phase = rng.uniform(0.0, 0.5);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = (static_cast<double>(i) + rng.uniform(0.0, 0.5)) / static_cast<double>(n);
    const double r = 1.0 + 0.08 * std::cos(2.0 * M_PI * (static_cast<double>(ripples) * t + phase));
    rows.push_back({r * std::sin(M_PI * t / 2.0), r * std::cos(M_PI * t / 2.0)});
  }
  return rows;
}

namespace brute {

inline bool dominates(const Point& a, const Point& b) {
  bool strict = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strict = true;
  }
  return strict;
}

inline double angle(const Point& u, const Point& v) {
  double uv = 0.0, uu = 0.0, vv = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    uv += u[k] * v[k];
    uu += u[k] * u[k];
    vv += v[k] * v[k];
  }
  if (uu == 0.0 || vv == 0.0) return 0.0;
  return std::acos(std::clamp(uv / std::sqrt(uu * vv), -1.0, 1.0));
}

// All compositions of h into m nonnegative parts, ascending lexicographically.
inline std::vector<Point> lattice(std::size_t m, std::size_t h) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> digits(m - 1, 0);
  while (true) {
    const std::size_t used = std::accumulate(digits.begin(), digits.end(), std::size_t{0});
    if (used <= h) {
      auto full = digits;
      full.push_back(h - used);
      parts.push_back(full);
    }
    std::size_t k = m - 1;
    while (k > 0 && digits[k - 1] == h) digits[--k] = 0;
    if (k == 0) break;
    ++digits[k - 1];
  }
  std::sort(parts.begin(), parts.end());
  std::vector<Point> out;
  for (const auto& p : parts) {
    Point w;
    for (std::size_t c : p) w.push_back(static_cast<double>(c) / static_cast<double>(h));
    out.push_back(w);
  }
  return out;
}

inline double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

struct Result {
  IndexList knees;
  std::vector<double> accumulative;
};

// Direct transcription: filter, normalize, lattice, nearest-angle adjacency,
// association, neighbourhood, pairwise utility test, sort.
inline Result identify(const std::vector<Point>& input) {
  const std::size_t m = input.front().size();
  IndexList kept;
  for (std::size_t i = 0; i < input.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < input.size() && !dominated; ++j) dominated = dominates(input[j], input[i]);
    if (!dominated) kept.push_back(i);
  }
  const std::size_t n = kept.size();
  Point lo(m, INFINITY), hi(m, -INFINITY);
  for (std::size_t i : kept)
    for (std::size_t k = 0; k < m; ++k) {
      lo[k] = std::min(lo[k], input[i][k]);
      hi[k] = std::max(hi[k], input[i][k]);
    }
  Point width(m);
  for (std::size_t k = 0; k < m; ++k) width[k] = hi[k] - lo[k] < 1e-12 ? 1.0 : hi[k] - lo[k];
  std::vector<Point> f(n, Point(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k) f[i][k] = hi[k] - lo[k] < 1e-12 ? 0.0 : (input[kept[i]][k] - lo[k]) / width[k];

  std::size_t h = 1;
  while (binomial(h + m, m - 1) <= static_cast<double>(n)) ++h;
  const auto w = lattice(m, h);

  std::vector<IndexList> omega(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    omega[i].push_back(i);
    double best = INFINITY;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != i) best = std::min(best, angle(w[i], w[j]));
    for (std::size_t j = 0; j < w.size(); ++j)
      if (j != i && angle(w[i], w[j]) <= best + 1e-12) omega[i].push_back(j);
  }
  IndexList region(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = INFINITY;
    for (const auto& v : w) best = std::min(best, angle(f[i], v));
    std::size_t j = 0;
    while (angle(f[i], w[j]) > best + 1e-12) ++j;
    region[i] = j;
  }
  auto utility = [&](std::size_t a, std::size_t b) {
    double gain = 0.0, loss = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double d = (input[kept[a]][k] - input[kept[b]][k]) / width[k];
      (d < 0.0 ? gain : loss) += d;
    }
    return gain + loss;
  };

  IndexList knees;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& adj = omega[region[i]];
    bool knee = true;
    for (std::size_t j = 0; j < n && knee; ++j) {
      if (j == i || std::find(adj.begin(), adj.end(), region[j]) == adj.end()) continue;
      if (utility(i, j) > 1e-12) knee = false;
    }
    if (knee) knees.push_back(i);
  }
  std::vector<double> score(knees.size(), 0.0);
  for (std::size_t a = 0; a < knees.size(); ++a)
    for (std::size_t b = 0; b < knees.size(); ++b)
      if (a != b) score[a] += utility(knees[a], knees[b]);
  IndexList order(knees.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  Result out;
  for (std::size_t o : order) {
    out.knees.push_back(kept[knees[o]]);
    out.accumulative.push_back(score[o]);
  }
  return out;
}

}  // namespace brute
}  // namespace testkit
