#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ladder/core_model.hpp"
#include "ladder/types.hpp"

namespace ladder {

// Sort by (level, side, id): rows of the ladder are laid out one after
// another, side 1 first.
std::vector<NodeId> project(const QuasiEmbedding& phi);

// Number of pairs whose relative order differs. O(n log n).
// Throws NodeSetMismatch when the two orders are not over the same nodes.
std::int64_t inversion_cost(const std::vector<NodeId>& from, const std::vector<NodeId>& to);

struct SwapSchedule {
  // Each entry swaps the nodes at 1-based positions p and p+1.
  std::vector<int> swaps;
  std::int64_t cost() const { return static_cast<std::int64_t>(swaps.size()); }
};

// Insertion-sort style schedule with exactly inversion_cost swaps.
SwapSchedule swap_schedule(const std::vector<NodeId>& from, const std::vector<NodeId>& to);
std::vector<NodeId> apply_schedule(std::vector<NodeId> order, const SwapSchedule& s);

// |pos(u) - pos(v)|; throws UnplacedNode, and UnplacedNode on u == v since a
// request needs two distinct endpoints.
int serve_cost(const LineConfig& line, NodeId u, NodeId v);

}  // namespace ladder
