#include "kneekit/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace kneekit {
namespace {

constexpr double kPi = std::numbers::pi;

// Radius term shared by the DEB/DO families: a quadratic bowl with K
// cosine ripples, whose troughs become the knees.
double ripple_radius(double x, std::size_t knees, double amplitude) {
  const auto k = static_cast<double>(knees);
  return 5.0 + 10.0 * (x - 0.5) * (x - 0.5) + amplitude * std::cos(2.0 * k * kPi * x) / k;
}

// Front point for position variables `p` and distance factor g >= 1.
Point front_point(const BenchmarkSpec& spec, std::span<const double> p, double g) {
  switch (spec.family) {
    case Family::DEB2DK: {
      // Branke et al. (2004), DEB2DK.
      const double r = ripple_radius(p[0], spec.knees, 1.0);
      return {g * r * std::sin(kPi * p[0] / 2.0), g * r * std::cos(kPi * p[0] / 2.0)};
    }
    case Family::DO2DK: {
      // Branke et al. (2004), DO2DK; s skews the front toward one end.
      const double s = spec.skew;
      const double r = ripple_radius(p[0], spec.knees, std::pow(2.0, s / 2.0));
      const double phase = (1.0 + (std::pow(2.0, s) - 1.0) / std::pow(2.0, s + 2.0)) * kPi;
      return {g * r * (std::sin(kPi * p[0] / std::pow(2.0, s + 1.0) + phase) + 1.0),
              g * r * (std::cos(kPi * p[0] / 2.0 + kPi) + 1.0)};
    }
    case Family::DEB3DK: {
      // Branke et al. (2004), DEB3DK: mean of one ripple radius per position variable.
      const double r = (ripple_radius(p[0], spec.knees, 1.0) + ripple_radius(p[1], spec.knees, 1.0)) / 2.0;
      const double a = kPi * p[0] / 2.0;
      const double b = kPi * p[1] / 2.0;
      return {g * r * std::sin(a) * std::sin(b), g * r * std::sin(a) * std::cos(b), g * r * std::cos(a)};
    }
    case Family::CKP: {
      // Concave quarter circle with K dents of depth 1/(2K).
      const auto k = static_cast<double>(spec.knees);
      const double dent = std::sin(k * kPi * p[0]);
      const double r = 1.0 - 0.5 * dent * dent / k;
      return {g * r * std::sin(kPi * p[0] / 2.0), g * r * std::cos(kPi * p[0] / 2.0)};
    }
  }
  throw UsageError("unknown benchmark family");
}

// Non-dominated mask for 2 or 3 objectives in O(N log N): sweep by f1 and
// keep a staircase of the best (f2, f3) seen at strictly smaller f1.
std::vector<bool> nondominated_mask(const std::vector<double>& flat, std::size_t m) {
  const std::size_t n = flat.size() / m;
  auto at = [&](std::size_t i, std::size_t k) { return flat[i * m + k]; };
  IndexList order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < m; ++k) {
      if (at(a, k) != at(b, k)) return at(a, k) < at(b, k);
    }
    return a < b;
  });

  std::vector<bool> keep(n, true);
  std::map<double, double> stairs;  // f2 ascending, f3 strictly descending
  double best_f2 = std::numeric_limits<double>::infinity();
  auto covered = [&](double f2, double f3) {
    if (m == 2) return best_f2 <= f2;
    auto it = stairs.upper_bound(f2);
    if (it == stairs.begin()) return false;
    return std::prev(it)->second <= f3;
  };
  auto insert = [&](double f2, double f3) {
    if (m == 2) {
      best_f2 = std::min(best_f2, f2);
      return;
    }
    if (covered(f2, f3)) return;
    auto [it, inserted] = stairs.insert_or_assign(f2, f3);
    auto next = std::next(it);
    while (next != stairs.end() && next->second >= f3) next = stairs.erase(next);
  };

  for (std::size_t g = 0; g < n;) {
    std::size_t end = g;
    while (end < n && at(order[end], 0) == at(order[g], 0)) ++end;
    for (std::size_t a = g; a < end; ++a) {
      const std::size_t i = order[a];
      const double f3 = m == 3 ? at(i, 2) : 0.0;
      bool dominated = covered(at(i, 1), f3);
      // Same f1: dominance is decided by the remaining objectives alone.
      for (std::size_t b = g; b < end && !dominated; ++b) {
        const std::size_t j = order[b];
        const double g3 = m == 3 ? at(j, 2) : 0.0;
        dominated = at(j, 1) <= at(i, 1) && g3 <= f3 && (at(j, 1) < at(i, 1) || g3 < f3);
      }
      keep[i] = !dominated;
    }
    for (std::size_t a = g; a < end; ++a) {
      const std::size_t i = order[a];
      insert(at(i, 1), m == 3 ? at(i, 2) : 0.0);
    }
    g = end;
  }
  return keep;
}

double distance(ObjectiveView a, ObjectiveView b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d += (a[k] - b[k]) * (a[k] - b[k]);
  return std::sqrt(d);
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::DO2DK: return "do2dk";
    case Family::DEB2DK: return "deb2dk";
    case Family::DEB3DK: return "deb3dk";
    case Family::CKP: return "ckp";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (Family f : {Family::DO2DK, Family::DEB2DK, Family::DEB3DK, Family::CKP}) {
    if (family_name(f) == lower) return f;
  }
  throw UsageError("unknown benchmark family '" + std::string(name) + "'");
}

void BenchmarkSpec::validate() const {
  const std::size_t expected = family == Family::DEB3DK ? 3 : 2;
  if (objectives != expected) {
    throw UsageError(std::string(family_name(family)) + " is defined for " + std::to_string(expected) +
                     " objectives, not " + std::to_string(objectives));
  }
  if (knees < 1) throw UsageError("knee-count parameter K must be at least 1");
  if (samples < 1) throw UsageError("sample count must be at least 1");
  if (skew < 0) throw UsageError("skew parameter must be non-negative");
}

BenchmarkSpec BenchmarkSpec::standard(Family family, std::size_t knees, int skew) {
  const bool three = family == Family::DEB3DK;
  return {family, three ? 3u : 2u, knees, skew, three ? 676u : 200u};
}

std::size_t position_variables(const BenchmarkSpec& spec) { return spec.family == Family::DEB3DK ? 2 : 1; }

Point evaluate(const BenchmarkSpec& spec, std::span<const double> x) {
  spec.validate();
  const std::size_t positions = position_variables(spec);
  if (x.size() < positions) throw UsageError("decision vector too short for this family");
  double g = 1.0;
  if (x.size() > positions) {
    const double tail = std::accumulate(x.begin() + static_cast<std::ptrdiff_t>(positions), x.end(), 0.0);
    g += 9.0 * tail / static_cast<double>(x.size() - positions);
  }
  return front_point(spec, x.first(positions), g);
}

TradeoffSet sample_front(const BenchmarkSpec& spec) {
  spec.validate();
  std::vector<Point> rows;
  if (position_variables(spec) == 1) {
    for (std::size_t i = 0; i < spec.samples; ++i) {
      const double p[] = {static_cast<double>(i) / static_cast<double>(spec.samples)};
      rows.push_back(front_point(spec, p, 1.0));
    }
  } else {
    const auto q = static_cast<std::size_t>(std::sqrt(static_cast<double>(spec.samples)));
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        const double p[] = {static_cast<double>(i) / static_cast<double>(q),
                            static_cast<double>(j) / static_cast<double>(q)};
        rows.push_back(front_point(spec, p, 1.0));
      }
    }
  }
  const auto all = TradeoffSet::from_rows(rows);
  return all.subset(pareto_filter(all));
}

std::size_t dense_resolution(const BenchmarkSpec& spec) { return position_variables(spec) == 1 ? 20000 : 260; }

GroundTruth ground_truth(const BenchmarkSpec& spec) {
  spec.validate();
  const std::size_t m = spec.objectives;
  const std::size_t res = dense_resolution(spec);
  const std::size_t side = res + 1;
  const bool planar = position_variables(spec) == 1;
  const std::size_t count = planar ? side : side * side;

  std::vector<double> flat;
  flat.reserve(count * m);
  for (std::size_t c = 0; c < count; ++c) {
    const std::size_t i = planar ? c : c / side;
    const std::size_t j = planar ? 0 : c % side;
    const double p[] = {static_cast<double>(i) / static_cast<double>(res),
                        static_cast<double>(j) / static_cast<double>(res)};
    const auto f = front_point(spec, std::span<const double>(p, planar ? 1 : 2), 1.0);
    flat.insert(flat.end(), f.begin(), f.end());
  }
  const auto optimal = nondominated_mask(flat, m);
  auto point = [&](std::size_t c) { return ObjectiveView(flat.data() + c * m, m); };

  ObjectiveRanges ranges{std::vector<double>(m, std::numeric_limits<double>::infinity()),
                         std::vector<double>(m, -std::numeric_limits<double>::infinity())};
  for (std::size_t c = 0; c < count; ++c) {
    if (!optimal[c]) continue;
    for (std::size_t k = 0; k < m; ++k) {
      ranges.min[k] = std::min(ranges.min[k], point(c)[k]);
      ranges.max[k] = std::max(ranges.max[k], point(c)[k]);
    }
  }
  std::vector<double> sum(count, 0.0);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t k = 0; k < m; ++k) sum[c] += (point(c)[k] - ranges.min[k]) / ranges.extent(k);
  }

  // Grid neighbours of cell c; the 8-neighbourhood on the square grid.
  auto neighbours = [&](std::size_t c) {
    IndexList out;
    if (planar) {
      if (c > 0) out.push_back(c - 1);
      if (c + 1 < side) out.push_back(c + 1);
      return out;
    }
    const auto i = static_cast<std::ptrdiff_t>(c / side);
    const auto j = static_cast<std::ptrdiff_t>(c % side);
    const auto s = static_cast<std::ptrdiff_t>(side);
    for (std::ptrdiff_t di = -1; di <= 1; ++di) {
      for (std::ptrdiff_t dj = -1; dj <= 1; ++dj) {
        if ((di != 0 || dj != 0) && i + di >= 0 && i + di < s && j + dj >= 0 && j + dj < s) {
          out.push_back(static_cast<std::size_t>((i + di) * s + j + dj));
        }
      }
    }
    return out;
  };
  auto interior = [&](std::size_t c) {
    if (planar) return c > 0 && c + 1 < side;
    const std::size_t i = c / side;
    const std::size_t j = c % side;
    return i > 0 && i + 1 < side && j > 0 && j + 1 < side;
  };

  std::vector<Point> knees;
  double tolerance = 0.0;
  for (std::size_t c = 0; c < count; ++c) {
    if (!optimal[c]) continue;
    const auto around = neighbours(c);
    for (std::size_t d : around) {
      // 4-neighbours only, so diagonal steps do not inflate the spacing.
      const bool axis = planar || d / side == c / side || d % side == c % side;
      if (d > c && axis && optimal[d]) tolerance = std::max(tolerance, distance(point(c), point(d)));
    }
    if (!interior(c)) continue;
    const bool minimum =
        std::all_of(around.begin(), around.end(), [&](std::size_t d) { return sum[c] <= sum[d] + 1e-12; });
    if (minimum) knees.emplace_back(point(c).begin(), point(c).end());
  }
  if (knees.empty()) throw UsageError("dense front has no interior knee");
  return {TradeoffSet::from_rows(knees), tolerance};
}

}  // namespace kneekit
