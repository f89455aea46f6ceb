#include "eventify/monoid_transforms.hpp"

#include <map>
#include <set>
#include <utility>

#include "eventify/transforms.hpp"

namespace eventify {

namespace {

const std::string kRoot = "ε";

std::string block_name(const Symbol& first, const Symbol& total) { return first + "·" + total; }

SymbolSet intersect(const SymbolSet& a, const SymbolSet& b) {
  SymbolSet out;
  for (const auto& symbol : a) {
    if (b.contains(symbol)) out.insert(symbol);
  }
  return out;
}

}  // namespace

TransformResult monoid_integrator(const Device& f, const MonoidVariator& monoid) {
  auto derivative = delta_transform(f, variator_from_monoid(monoid, f.observations()));
  if (!derivative) return derivative;
  const Device& g = derivative.device();
  const auto& origins = derivative.provenance();
  StateId root = *g.initials().begin();

  DeviceBuilder builder;
  builder.add_observations(g.observations()).add_outputs(g.output_alphabet());
  builder.add_state(kRoot, g.output(root)).add_initial(kRoot);
  Provenance provenance;
  provenance[kRoot] = origins.at(g.name(root));

  std::map<Symbol, StateId> branches;
  for (const auto& [to, labels] : g.out_edges(root)) {
    for (const auto& label : labels) branches.emplace(label, to);
  }

  for (const auto& [first, head] : branches) {
    builder.add_state(first, g.output(head)).add_edge(kRoot, first, {first});
    provenance[first] = origins.at(g.name(head));

    // Every (total, state) pair is expanded once; D × V(g) is finite, so the
    // worklist empties.
    std::map<Symbol, std::set<StateId>> reached;
    std::set<std::pair<Symbol, StateId>> visited{{monoid.identity, head}};
    std::vector<std::pair<Symbol, StateId>> stack{{monoid.identity, head}};
    while (!stack.empty()) {
      auto [total, state] = stack.back();
      stack.pop_back();
      for (const auto& [to, labels] : g.out_edges(state)) {
        for (const auto& difference : labels) {
          Symbol next = monoid.combine(total, difference);
          reached[next].insert(to);
          if (visited.emplace(next, to).second) stack.emplace_back(next, to);
        }
      }
    }

    for (const auto& [total, states] : reached) {
      SymbolSet outputs = g.output(*states.begin());
      for (StateId state : states) outputs = intersect(outputs, g.output(state));
      if (outputs.empty()) {
        NoSolution failure;
        failure.reason = NoSolution::Reason::OutputConflict;
        failure.witness = {first, total};
        for (StateId state : states) {
          failure.conflict_states.push_back(g.name(state));
          failure.conflict_outputs.push_back(g.output(state));
        }
        failure.message = "strings starting with '" + first + "' with total '" + total + "' share no output";
        return failure;
      }
      std::string name = block_name(first, total);
      builder.add_state(name, outputs).add_edge(first, name, {total});
      auto& origin = provenance[name];
      for (StateId state : states) origin.insert(origins.at(g.name(state)).begin(), origins.at(g.name(state)).end());
    }
  }
  return TransformResult(builder.build(), std::move(provenance));
}

Device disaggregator(const Device& integrator, const MonoidVariator& monoid) {
  StateId root = *integrator.initials().begin();
  DeviceBuilder builder;
  builder.add_observations(integrator.observations()).add_outputs(integrator.output_alphabet());
  builder.add_observations(SymbolSet(monoid.elements.begin(), monoid.elements.end()));
  builder.add_state(kRoot, integrator.output(root)).add_initial(kRoot);

  SymbolSet firsts = integrator.outgoing_labels(root);
  for (const auto& first : firsts) {
    builder.add_state(first, outputs_of(integrator, {first})).add_edge(kRoot, first, {first});
    for (const auto& element : monoid.elements) {
      SymbolSet outputs = outputs_of(integrator, {first, element});
      if (outputs.empty()) outputs = integrator.output_alphabet();
      builder.add_state(block_name(first, element), outputs);
      builder.add_edge(first, block_name(first, element), {element});
    }
    for (const auto& from : monoid.elements) {
      for (const auto& step : monoid.elements) {
        builder.add_edge(block_name(first, from), block_name(first, monoid.combine(from, step)), {step});
      }
    }
  }
  return builder.build();
}

TransformResult eventify_pipeline(const Device& f, const MonoidVariator& monoid) {
  if (f.observations().contains(monoid.identity)) {
    throw InvalidModel("the identity '" + monoid.identity + "' must not be an observation");
  }
  auto integrated = monoid_integrator(f, monoid);
  if (!integrated) return integrated;
  Device expanded = disaggregator(integrated.device(), monoid);

  // Reading the identity right after the first observation must not move the
  // device, so the first-layer state and its identity block become one.
  StateId root = *expanded.initials().begin();
  SymbolSet firsts = expanded.outgoing_labels(root);
  DeviceBuilder builder;
  builder.add_observations(expanded.observations()).add_outputs(expanded.output_alphabet());
  builder.add_state(kRoot, expanded.output(root)).add_initial(kRoot);
  for (const auto& first : firsts) {
    std::string anchor = block_name(first, monoid.identity);
    const auto& head = expanded.output(*expanded.find(first));
    const auto& rest = expanded.output(*expanded.find(anchor));
    SymbolSet outputs = intersect(head, rest);
    if (outputs.empty()) {
      NoSolution failure;
      failure.reason = NoSolution::Reason::OutputConflict;
      failure.witness = {first, monoid.identity};
      failure.conflict_states = {first, anchor};
      failure.conflict_outputs = {head, rest};
      failure.message = "'" + first + "' and '" + first + " " + monoid.identity +
                        "' must reach one state but share no output";
      return failure;
    }
    builder.add_edge(kRoot, anchor, {first});
    for (const auto& element : monoid.elements) {
      std::string name = block_name(first, element);
      builder.add_state(name, name == anchor ? outputs : expanded.output(*expanded.find(name)));
      for (const auto& step : monoid.elements) {
        builder.add_edge(name, block_name(first, monoid.combine(element, step)), {step});
      }
    }
  }
  Device restricted = singleton_restrict(builder.build());

  Provenance provenance;
  for (const auto& [name, origin] : integrated.provenance()) {
    if (restricted.find(name)) provenance[name] = origin;
  }
  return TransformResult(std::move(restricted), std::move(provenance));
}

}  // namespace eventify
