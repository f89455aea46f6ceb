#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "eventify/device.hpp"
#include "eventify/variator.hpp"

namespace eventify {

/// Simple undirected graph; edges are stored with the smaller endpoint first.
struct Graph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;

  /// Adds both endpoints. Throws InvalidModel on a self-loop.
  void add_edge(const std::string& a, const std::string& b);
};

/// A variator with at most `n` differences under which delta_transform
/// succeeds, or nothing if none exists. The search assigns one difference to
/// each pair of consecutive observations that occurs in f and checks every
/// complete assignment with delta_transform.
std::optional<Variator> minimize_variator(const Device& f, std::size_t n);

/// Smallest n ≤ cap for which minimize_variator succeeds.
std::optional<std::size_t> exact_min_cardinality(const Device& f, std::size_t cap);

/// Device whose difference alphabet can have three symbols exactly when the
/// graph is 3-colorable. Each edge (v, w) becomes a gadget: a head state
/// branching on v or w into middle states with outputs 1 and 2, each followed
/// by a tail; gadgets are chained by a separator observation "x".
Device reduce_3coloring(const Graph& graph);

/// Exhaustive check; throws std::invalid_argument above 12 vertices.
bool graph_3colorable_bruteforce(const Graph& graph);

}  // namespace eventify
