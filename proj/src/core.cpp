#include "kneekit/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>

namespace kneekit {

ObjectiveRanges ObjectiveRanges::unit(std::size_t m) {
  return {std::vector<double>(m, 0.0), std::vector<double>(m, 1.0)};
}

TradeoffSet::TradeoffSet(std::size_t dimension, std::vector<double> values)
    : dimension_(dimension), values_(std::move(values)) {
  if (dimension_ < 2) throw UsageError("tradeoff set needs at least two objectives");
  if (values_.empty()) throw UsageError("tradeoff set must not be empty");
  if (values_.size() % dimension_ != 0) throw UsageError("value count is not a multiple of the objective count");
  for (double v : values_) {
    if (!std::isfinite(v)) throw UsageError("objective values must be finite");
  }
  ranges_.min.assign(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(dimension_));
  ranges_.max = ranges_.min;
  for (std::size_t i = 1; i < size(); ++i) {
    for (std::size_t k = 0; k < dimension_; ++k) {
      const double v = values_[i * dimension_ + k];
      ranges_.min[k] = std::min(ranges_.min[k], v);
      ranges_.max[k] = std::max(ranges_.max[k], v);
    }
  }
}

TradeoffSet TradeoffSet::from_rows(const std::vector<Point>& rows) {
  if (rows.empty()) throw UsageError("tradeoff set must not be empty");
  const std::size_t m = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * m);
  for (const auto& r : rows) {
    if (r.size() != m) throw UsageError("all points must share the same dimension");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return TradeoffSet(m, std::move(flat));
}

Point TradeoffSet::row(std::size_t i) const {
  const auto v = (*this)[i];
  return {v.begin(), v.end()};
}

std::vector<Point> TradeoffSet::rows() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(row(i));
  return out;
}

TradeoffSet TradeoffSet::subset(std::span<const std::size_t> indices) const {
  std::vector<double> flat;
  flat.reserve(indices.size() * dimension_);
  for (std::size_t i : indices) {
    if (i >= size()) throw UsageError("subset index out of range");
    const auto v = (*this)[i];
    flat.insert(flat.end(), v.begin(), v.end());
  }
  return TradeoffSet(dimension_, std::move(flat));
}

NormalizedSet NormalizedSet::from_normalized(const std::vector<Point>& rows) {
  const auto set = TradeoffSet::from_rows(rows);
  return NormalizedSet(set.dimension(), set.values(), ObjectiveRanges::unit(set.dimension()));
}

void require_same_dimension(ObjectiveView a, ObjectiveView b) {
  if (a.size() != b.size()) {
    throw UsageError("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

bool dominates(ObjectiveView a, ObjectiveView b) {
  require_same_dimension(a, b);
  bool strictly = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strictly = true;
  }
  return strictly;
}

NormalizedSet normalize(const TradeoffSet& set) {
  const std::size_t m = set.dimension();
  const auto& r = set.ranges();
  std::vector<double> out(set.values().size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      out[i * m + k] = r.degenerate(k) ? 0.0 : (set[i][k] - r.min[k]) / r.extent(k);
    }
  }
  return NormalizedSet(m, std::move(out), r);
}

IndexList pareto_filter(const TradeoffSet& set) {
  IndexList keep;
  for (std::size_t i = 0; i < set.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < set.size() && !dominated; ++j) {
      dominated = j != i && dominates(set[j], set[i]);
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

}  // namespace kneekit

namespace kneekit {
namespace {
std::atomic<bool> warnings_muted{false};
}

void warn(std::string_view message) {
  if (!warnings_muted.load()) std::clog << "warning: " << message << '\n';
}

QuietWarnings::QuietWarnings() : previous_(warnings_muted.exchange(true)) {}
QuietWarnings::~QuietWarnings() { warnings_muted.store(previous_); }

}  // namespace kneekit
