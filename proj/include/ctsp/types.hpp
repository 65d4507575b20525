#pragma once

#include <cstdint>
#include <limits>

namespace ctsp {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Cost = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Inputs are validated so that the sum of all edge costs stays below this;
// every cost produced by the reductions is bounded by that sum, so plain
// int64 arithmetic never overflows.
inline constexpr Cost kMaxTotalCost = Cost{1} << 62;

}  // namespace ctsp
