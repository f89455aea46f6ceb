#pragma once

// Vertex split of a deterministic device: one node per (state, label of the
// edge used to enter it), plus a root for the initial state entered by ε.
// Every node therefore knows the last observation read to reach it.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eventify/device.hpp"

namespace eventify::detail {

struct SplitNode {
  StateId state;
  std::optional<Symbol> entered_by;
  /// Shortest (then lexicographically least) string reaching this node.
  Word path;
  std::vector<std::pair<Symbol, std::size_t>> arcs;
};

/// Reachable split nodes in breadth-first order; node 0 is the root.
std::vector<SplitNode> split_device(const Device& deterministic);

}  // namespace eventify::detail
