#include "eventify/transforms.hpp"

#include "split.hpp"
#include "subset.hpp"

namespace eventify {

namespace {

using detail::WorkGraph;

enum class Leading { Keep, Shave };

TransformResult differencing(const Device& input, const Variator& variator, Leading leading) {
  Device f = detail::deterministic_view(input);
  auto nodes = detail::split_device(f);

  WorkGraph graph;
  graph.output_alphabet = f.output_alphabet();
  graph.observations = variator.differences;
  if (leading == Leading::Keep) graph.observations.insert(f.observations().begin(), f.observations().end());

  for (const auto& node : nodes) {
    std::string name = f.name(node.state);
    if (node.entered_by) name += "·" + *node.entered_by;
    graph.add_node(std::move(name), f.output(node.state), {f.name(node.state)});
  }
  graph.initial = {0};

  for (std::size_t from = 0; from < nodes.size(); ++from) {
    const auto& node = nodes[from];
    for (const auto& [label, to] : node.arcs) {
      if (!node.entered_by) {
        if (leading == Leading::Keep) {
          graph.add_arc(from, label, to);
        } else {
          graph.add_epsilon(from, to);
        }
        continue;
      }
      SymbolSet covering = variator.differences_between(*node.entered_by, label);
      if (covering.empty()) {
        NoSolution failure;
        failure.reason = NoSolution::Reason::UncoveredChange;
        failure.uncovered_pair = {*node.entered_by, label};
        failure.witness = node.path;
        failure.witness.push_back(label);
        failure.message = "no difference leads from '" + *node.entered_by + "' to '" + label + "' (after " +
                          format_word(failure.witness) + ")";
        return failure;
      }
      for (const auto& difference : covering) graph.add_arc(from, difference, to);
    }
  }
  return detail::subset_construct(graph, OutputMerge::Intersection);
}

}  // namespace

TransformResult delta_transform(const Device& f, const Variator& variator) {
  return differencing(f, variator, Leading::Keep);
}

TransformResult shave_delta_transform(const Device& f, const Variator& variator) {
  return differencing(f, variator, Leading::Shave);
}

TransformResult shrink_transform(const Device& input, const SymbolSet& neutral) {
  Device f = detail::deterministic_view(input);
  WorkGraph graph;
  graph.output_alphabet = f.output_alphabet();
  for (const auto& symbol : f.observations()) {
    if (!neutral.contains(symbol)) graph.observations.insert(symbol);
  }
  for (StateId state = 0; state < f.size(); ++state) {
    graph.add_node(f.name(state), f.output(state), {f.name(state)});
  }
  for (const auto& edge : f.edges()) {
    for (const auto& label : edge.labels) {
      if (neutral.contains(label)) {
        graph.add_epsilon(edge.from, edge.to);
      } else {
        graph.add_arc(edge.from, label, edge.to);
      }
    }
  }
  graph.initial.assign(f.initials().begin(), f.initials().end());
  return detail::subset_construct(graph, OutputMerge::Intersection);
}

TransformResult pump_transform(const Device& input, const SymbolSet& neutral) {
  Device f = detail::deterministic_view(input);
  StateId start = *f.initials().begin();
  WorkGraph graph = detail::graph_of(f);
  graph.observations.insert(neutral.begin(), neutral.end());

  std::string fresh = f.name(start) + "'";
  while (f.find(fresh)) fresh += "'";
  std::size_t entry = graph.add_node(fresh, f.output(start), {f.name(start)});
  for (const auto& [to, labels] : f.out_edges(start)) {
    for (const auto& label : labels) graph.add_arc(entry, label, to);
  }
  for (StateId state = 0; state < f.size(); ++state) {
    for (const auto& symbol : neutral) graph.add_arc(state, symbol, state);
  }
  graph.initial = {entry};
  return detail::subset_construct(graph, OutputMerge::Intersection);
}

std::size_t split_size(const Device& f) { return detail::split_device(detail::deterministic_view(f)).size(); }

}  // namespace eventify
