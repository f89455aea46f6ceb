#include "split.hpp"

#include <map>

namespace eventify::detail {

std::vector<SplitNode> split_device(const Device& f) {
  std::vector<SplitNode> nodes;
  std::map<std::pair<StateId, Symbol>, std::size_t> index;
  nodes.push_back({*f.initials().begin(), std::nullopt, {}, {}});
  for (std::size_t current = 0; current < nodes.size(); ++current) {
    StateId state = nodes[current].state;
    std::map<Symbol, StateId> moves;
    for (const auto& [to, labels] : f.out_edges(state)) {
      for (const auto& label : labels) moves.emplace(label, to);
    }
    for (const auto& [label, to] : moves) {
      auto [it, inserted] = index.emplace(std::pair{to, label}, nodes.size());
      if (inserted) {
        Word path = nodes[current].path;
        path.push_back(label);
        nodes.push_back({to, label, std::move(path), {}});
      }
      nodes[current].arcs.emplace_back(label, it->second);
    }
  }
  return nodes;
}

}  // namespace eventify::detail
