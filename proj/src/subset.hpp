#pragma once

// Nondeterministic working graph shared by the transforms, plus the subset
// construction that turns it into a deterministic device.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eventify/device.hpp"
#include "eventify/result.hpp"

namespace eventify::detail {

struct WorkGraph {
  std::vector<std::string> names;
  std::vector<SymbolSet> outputs;
  std::vector<std::set<std::string>> origins;
  std::vector<std::vector<std::pair<Symbol, std::size_t>>> arcs;
  std::vector<std::vector<std::size_t>> epsilon;
  std::vector<std::size_t> initial;
  SymbolSet observations;
  SymbolSet output_alphabet;

  std::size_t add_node(std::string name, SymbolSet node_outputs, std::set<std::string> node_origins);
  void add_arc(std::size_t from, const Symbol& label, std::size_t to);
  void add_epsilon(std::size_t from, std::size_t to);

  std::set<std::size_t> closure(std::set<std::size_t> nodes) const;
};

/// Copies a device into a working graph, one node per state.
WorkGraph graph_of(const Device& device);

/// Subset construction with ε-closure. Under Intersection, a merged state
/// whose outputs intersect to ∅ yields NoSolution(OutputConflict) naming the
/// merged nodes and the shortest string reaching them.
TransformResult subset_construct(const WorkGraph& graph, OutputMerge merge);

/// Returns `f` unchanged when deterministic, else its union determinization.
Device deterministic_view(const Device& f);

}  // namespace eventify::detail
