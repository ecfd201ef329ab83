#pragma once

#include "kneekit/kpitu.hpp"

namespace kneekit::detail {

/// Non-dominated members of `set`, logging a warning if any were dropped.
IndexList nondominated_or_warn(const TradeoffSet& set);

/// Sorts the knees found on the filtered set and maps every index back to
/// the caller's indexing.
KneeResult assemble(const TradeoffSet& set, const IndexList& kept, const TradeoffSet& filtered,
                    NeighbourhoodIndex local, const IndexList& knees, const KpituOptions& options);

}  // namespace kneekit::detail
