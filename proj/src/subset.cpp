#include "subset.hpp"

#include <deque>
#include <map>

namespace eventify::detail {

std::size_t WorkGraph::add_node(std::string name, SymbolSet node_outputs, std::set<std::string> node_origins) {
  names.push_back(std::move(name));
  outputs.push_back(std::move(node_outputs));
  origins.push_back(std::move(node_origins));
  arcs.emplace_back();
  epsilon.emplace_back();
  return names.size() - 1;
}

void WorkGraph::add_arc(std::size_t from, const Symbol& label, std::size_t to) {
  arcs[from].emplace_back(label, to);
}

void WorkGraph::add_epsilon(std::size_t from, std::size_t to) { epsilon[from].push_back(to); }

std::set<std::size_t> WorkGraph::closure(std::set<std::size_t> nodes) const {
  std::deque<std::size_t> queue(nodes.begin(), nodes.end());
  while (!queue.empty()) {
    std::size_t node = queue.front();
    queue.pop_front();
    for (std::size_t to : epsilon[node]) {
      if (nodes.insert(to).second) queue.push_back(to);
    }
  }
  return nodes;
}

WorkGraph graph_of(const Device& device) {
  WorkGraph graph;
  graph.observations = device.observations();
  graph.output_alphabet = device.output_alphabet();
  for (StateId state = 0; state < device.size(); ++state) {
    graph.add_node(device.name(state), device.output(state), {device.name(state)});
  }
  for (const auto& edge : device.edges()) {
    for (const auto& label : edge.labels) graph.add_arc(edge.from, label, edge.to);
  }
  graph.initial.assign(device.initials().begin(), device.initials().end());
  return graph;
}

namespace {

SymbolSet merge_outputs(const WorkGraph& graph, const std::set<std::size_t>& members, OutputMerge merge) {
  auto it = members.begin();
  SymbolSet merged = graph.outputs[*it];
  for (++it; it != members.end(); ++it) {
    const auto& next = graph.outputs[*it];
    if (merge == OutputMerge::Union) {
      merged.insert(next.begin(), next.end());
    } else {
      SymbolSet kept;
      for (const auto& symbol : merged) {
        if (next.contains(symbol)) kept.insert(symbol);
      }
      merged = std::move(kept);
    }
  }
  return merged;
}

NoSolution conflict(const WorkGraph& graph, const std::set<std::size_t>& members, Word path) {
  NoSolution failure;
  failure.reason = NoSolution::Reason::OutputConflict;
  failure.witness = std::move(path);
  for (std::size_t node : members) {
    failure.conflict_states.push_back(graph.names[node]);
    failure.conflict_outputs.push_back(graph.outputs[node]);
  }
  failure.message = "states merged after " + format_word(failure.witness) + " share no output";
  return failure;
}

}  // namespace

TransformResult subset_construct(const WorkGraph& graph, OutputMerge merge) {
  using Members = std::set<std::size_t>;
  std::map<Members, std::string> named;
  std::set<std::string> used_names;
  std::vector<Members> order;
  std::vector<Word> paths;
  std::vector<SymbolSet> outputs;

  auto name_for = [&](const Members& members) {
    std::string name;
    if (members.size() == 1) {
      name = graph.names[*members.begin()];
    } else {
      std::set<std::string> parts;
      for (std::size_t node : members) parts.insert(graph.names[node]);
      name = "{";
      for (const auto& part : parts) name += (name.size() > 1 ? "," : "") + part;
      name += "}";
    }
    while (used_names.contains(name)) name += "'";
    used_names.insert(name);
    return name;
  };

  Members start = graph.closure(Members(graph.initial.begin(), graph.initial.end()));
  SymbolSet start_outputs = merge_outputs(graph, start, merge);
  if (start_outputs.empty()) return conflict(graph, start, {});
  named.emplace(start, name_for(start));
  order.push_back(start);
  paths.push_back({});
  outputs.push_back(start_outputs);

  DeviceBuilder builder;
  builder.add_observations(graph.observations).add_outputs(graph.output_alphabet);

  std::vector<std::tuple<std::size_t, Symbol, Members>> transitions;
  for (std::size_t index = 0; index < order.size(); ++index) {
    std::map<Symbol, Members> targets;
    for (std::size_t node : order[index]) {
      for (const auto& [label, to] : graph.arcs[node]) targets[label].insert(to);
    }
    for (auto& [label, raw] : targets) {
      Members next = graph.closure(std::move(raw));
      if (!named.contains(next)) {
        Word path = paths[index];
        path.push_back(label);
        SymbolSet merged = merge_outputs(graph, next, merge);
        if (merged.empty()) return conflict(graph, next, std::move(path));
        named.emplace(next, name_for(next));
        order.push_back(next);
        paths.push_back(std::move(path));
        outputs.push_back(std::move(merged));
      }
      transitions.emplace_back(index, label, next);
    }
  }

  Provenance provenance;
  for (std::size_t index = 0; index < order.size(); ++index) {
    const auto& name = named.at(order[index]);
    builder.add_state(name, outputs[index]);
    auto& origin = provenance[name];
    for (std::size_t node : order[index]) origin.insert(graph.origins[node].begin(), graph.origins[node].end());
  }
  builder.add_initial(named.at(start));
  for (const auto& [from, label, to] : transitions) {
    builder.add_edge(named.at(order[from]), named.at(to), {label});
  }
  return TransformResult(builder.build(), std::move(provenance));
}

Device deterministic_view(const Device& f) {
  if (is_deterministic(f)) return f;
  return subset_construct(graph_of(f), OutputMerge::Union).device();
}

}  // namespace eventify::detail

namespace eventify {

std::string to_string(NoSolution::Reason reason) {
  switch (reason) {
    case NoSolution::Reason::UncoveredChange:
      return "uncovered-change";
    case NoSolution::Reason::OutputConflict:
      return "output-conflict";
  }
  return "unknown";
}

TransformResult determinize(const Device& device, OutputMerge merge) {
  return detail::subset_construct(detail::graph_of(device), merge);
}

}  // namespace eventify
