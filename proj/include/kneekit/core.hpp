#pragma once

// Objective-space containers, Pareto dominance and normalization shared by
// every other module. All objectives are minimized.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kneekit {

/// Raised when a caller violates an operation's precondition
/// (dimension mismatch, empty input, out-of-range parameter).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is asked to work in a dimension it does not support.
class DimensionError : public UsageError {
 public:
  using UsageError::UsageError;
};

using ObjectiveView = std::span<const double>;
using Point = std::vector<double>;
using IndexList = std::vector<std::size_t>;

/// Objectives whose range falls below this are treated as degenerate.
inline constexpr double kDegenerateRange = 1e-12;

/// Per-objective extrema of a point set.
struct ObjectiveRanges {
  std::vector<double> min;
  std::vector<double> max;

  std::size_t dimension() const { return min.size(); }

  /// Denominator used by normalization and every utility formula; 1 for a
  /// degenerate objective.
  double extent(std::size_t i) const {
    const double width = max[i] - min[i];
    return width < kDegenerateRange ? 1.0 : width;
  }
  bool degenerate(std::size_t i) const { return max[i] - min[i] < kDegenerateRange; }

  /// Ranges [0,1] in every objective.
  static ObjectiveRanges unit(std::size_t m);
};

/// N objective vectors in m dimensions, stored row-major. Immutable after
/// construction; ranges are recomputed from the points.
class TradeoffSet {
 public:
  TradeoffSet(std::size_t dimension, std::vector<double> values);

  static TradeoffSet from_rows(const std::vector<Point>& rows);

  std::size_t size() const { return values_.size() / dimension_; }
  std::size_t dimension() const { return dimension_; }
  ObjectiveView operator[](std::size_t i) const { return {values_.data() + i * dimension_, dimension_}; }
  const ObjectiveRanges& ranges() const { return ranges_; }
  const std::vector<double>& values() const { return values_; }

  Point row(std::size_t i) const;
  std::vector<Point> rows() const;

  /// Points at `indices`, in that order. Ranges are recomputed on the subset.
  TradeoffSet subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t dimension_;
  std::vector<double> values_;
  ObjectiveRanges ranges_;
};

/// Points mapped into [0,1]^m together with the ranges they came from.
class NormalizedSet {
 public:
  std::size_t size() const { return values_.size() / dimension_; }
  std::size_t dimension() const { return dimension_; }
  ObjectiveView operator[](std::size_t i) const { return {values_.data() + i * dimension_, dimension_}; }
  const ObjectiveRanges& source_ranges() const { return source_; }

  /// Wraps values that are already normalized; the source ranges are taken
  /// to be [0,1] in every objective.
  static NormalizedSet from_normalized(const std::vector<Point>& rows);

 private:
  friend NormalizedSet normalize(const TradeoffSet& set);
  NormalizedSet(std::size_t dimension, std::vector<double> values, ObjectiveRanges source)
      : dimension_(dimension), values_(std::move(values)), source_(std::move(source)) {}

  std::size_t dimension_;
  std::vector<double> values_;
  ObjectiveRanges source_;
};

/// True iff `a` is no worse than `b` everywhere and strictly better somewhere.
bool dominates(ObjectiveView a, ObjectiveView b);

/// (f_i - z_min_i) / (z_max_i - z_min_i); degenerate objectives map to 0.
NormalizedSet normalize(const TradeoffSet& set);

/// Indices of points not dominated by any other point, in input order.
IndexList pareto_filter(const TradeoffSet& set);

void require_same_dimension(ObjectiveView a, ObjectiveView b);

/// Writes "warning: <message>" to std::clog unless warnings are muted.
void warn(std::string_view message);

/// Mutes warnings for its lifetime (process-wide; not meant for concurrent use).
class QuietWarnings {
 public:
  QuietWarnings();
  ~QuietWarnings();
  QuietWarnings(const QuietWarnings&) = delete;
  QuietWarnings& operator=(const QuietWarnings&) = delete;

 private:
  bool previous_;
};

}  // namespace kneekit
