#include "eventify/device.hpp"

#include <algorithm>
#include <deque>

namespace eventify {

Symbol pair_symbol(const Symbol& first, const Symbol& second) {
  return "(" + first + "," + second + ")";
}

std::string format_word(const Word& word) {
  if (word.empty()) return "ε";
  std::string out;
  for (const auto& symbol : word) {
    if (!out.empty()) out += ' ';
    out += symbol;
  }
  return out;
}

std::string format_set(const SymbolSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& symbol : set) {
    if (!first) out += ',';
    out += symbol;
    first = false;
  }
  return out + "}";
}

std::optional<StateId> Device::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

std::vector<Device::Edge> Device::edges() const {
  std::vector<Edge> out;
  for (StateId from = 0; from < size(); ++from) {
    for (const auto& [to, labels] : edges_[from]) out.push_back({from, to, labels});
  }
  return out;
}

std::size_t Device::edge_count() const {
  std::size_t count = 0;
  for (const auto& targets : edges_) count += targets.size();
  return count;
}

std::vector<StateId> Device::successors(StateId state, const Symbol& symbol) const {
  std::vector<StateId> out;
  for (const auto& [to, labels] : edges_.at(state)) {
    if (labels.contains(symbol)) out.push_back(to);
  }
  return out;
}

SymbolSet Device::outgoing_labels(StateId state) const {
  SymbolSet out;
  for (const auto& [to, labels] : edges_.at(state)) out.insert(labels.begin(), labels.end());
  return out;
}

StateSet Device::reachable() const {
  StateSet seen = initials_;
  std::deque<StateId> queue(initials_.begin(), initials_.end());
  while (!queue.empty()) {
    StateId state = queue.front();
    queue.pop_front();
    for (const auto& [to, labels] : edges_[state]) {
      if (!labels.empty() && seen.insert(to).second) queue.push_back(to);
    }
  }
  return seen;
}

DeviceBuilder& DeviceBuilder::add_state(const std::string& name, SymbolSet outputs) {
  auto& slot = states_[name];
  slot.insert(outputs.begin(), outputs.end());
  outputs_.insert(outputs.begin(), outputs.end());
  return *this;
}

DeviceBuilder& DeviceBuilder::add_initial(const std::string& name) {
  initials_.insert(name);
  return *this;
}

DeviceBuilder& DeviceBuilder::add_edge(const std::string& from, const std::string& to, SymbolSet labels) {
  observations_.insert(labels.begin(), labels.end());
  auto& slot = edges_[{from, to}];
  slot.insert(labels.begin(), labels.end());
  return *this;
}

DeviceBuilder& DeviceBuilder::add_observations(const SymbolSet& symbols) {
  observations_.insert(symbols.begin(), symbols.end());
  return *this;
}

DeviceBuilder& DeviceBuilder::add_outputs(const SymbolSet& symbols) {
  outputs_.insert(symbols.begin(), symbols.end());
  return *this;
}

Device DeviceBuilder::build() const {
  if (initials_.empty()) throw InvalidModel("device needs at least one initial state");
  Device device;
  device.names_.reserve(states_.size());
  for (const auto& [name, outputs] : states_) {
    if (outputs.empty()) throw InvalidModel("state '" + name + "' has an empty output set");
    device.names_.push_back(name);
    device.outputs_.push_back(outputs);
  }
  auto lookup = [&](const std::string& name, const char* role) {
    auto id = device.find(name);
    if (!id) throw InvalidModel(std::string(role) + " refers to unknown state '" + name + "'");
    return *id;
  };
  for (const auto& name : initials_) device.initials_.insert(lookup(name, "initial"));
  device.edges_.resize(device.names_.size());
  for (const auto& [ends, labels] : edges_) {
    if (labels.empty()) continue;
    StateId from = lookup(ends.first, "edge source");
    StateId to = lookup(ends.second, "edge target");
    device.edges_[from][to] = labels;
  }
  device.observations_ = observations_;
  device.output_alphabet_ = outputs_;
  return device;
}

StateSet trace(const Device& device, const Word& word) {
  StateSet current = device.initials();
  for (const auto& symbol : word) {
    StateSet next;
    for (StateId state : current) {
      for (StateId to : device.successors(state, symbol)) next.insert(to);
    }
    if (next.empty()) return next;
    current = std::move(next);
  }
  return current;
}

bool language_contains(const Device& device, const Word& word) { return !trace(device, word).empty(); }

SymbolSet outputs_of(const Device& device, const Word& word) {
  SymbolSet out;
  for (StateId state : trace(device, word)) {
    const auto& outputs = device.output(state);
    out.insert(outputs.begin(), outputs.end());
  }
  return out;
}

bool is_deterministic(const Device& device) {
  if (device.initials().size() != 1) return false;
  for (StateId state = 0; state < device.size(); ++state) {
    SymbolSet seen;
    for (const auto& [to, labels] : device.out_edges(state)) {
      for (const auto& label : labels) {
        if (!seen.insert(label).second) return false;
      }
    }
  }
  return true;
}

Symbol lexicographic_choice(const std::string&, const SymbolSet& outputs) { return *outputs.begin(); }

Device singleton_restrict(const Device& device, const OutputChooser& chooser) {
  DeviceBuilder builder;
  builder.add_observations(device.observations()).add_outputs(device.output_alphabet());
  for (StateId state = 0; state < device.size(); ++state) {
    const auto& outputs = device.output(state);
    Symbol chosen = chooser(device.name(state), outputs);
    if (!outputs.contains(chosen)) {
      throw InvalidModel("chooser picked '" + chosen + "' outside the outputs of '" + device.name(state) + "'");
    }
    builder.add_state(device.name(state), {chosen});
  }
  for (StateId state : device.initials()) builder.add_initial(device.name(state));
  for (const auto& edge : device.edges()) builder.add_edge(device.name(edge.from), device.name(edge.to), edge.labels);
  return builder.build();
}

Device direct_product(const Device& first, const Device& second) {
  DeviceBuilder builder;
  SymbolSet observations;
  for (const auto& a : first.observations()) {
    for (const auto& b : second.observations()) observations.insert(pair_symbol(a, b));
  }
  SymbolSet outputs;
  for (const auto& a : first.output_alphabet()) {
    for (const auto& b : second.output_alphabet()) outputs.insert(pair_symbol(a, b));
  }
  builder.add_observations(observations).add_outputs(outputs);

  auto state_name = [&](StateId a, StateId b) { return pair_symbol(first.name(a), second.name(b)); };
  for (StateId a = 0; a < first.size(); ++a) {
    for (StateId b = 0; b < second.size(); ++b) {
      SymbolSet paired;
      for (const auto& x : first.output(a)) {
        for (const auto& y : second.output(b)) paired.insert(pair_symbol(x, y));
      }
      builder.add_state(state_name(a, b), std::move(paired));
    }
  }
  for (StateId a : first.initials()) {
    for (StateId b : second.initials()) builder.add_initial(state_name(a, b));
  }
  for (const auto& left : first.edges()) {
    for (const auto& right : second.edges()) {
      SymbolSet labels;
      for (const auto& x : left.labels) {
        for (const auto& y : right.labels) labels.insert(pair_symbol(x, y));
      }
      builder.add_edge(state_name(left.from, right.from), state_name(left.to, right.to), std::move(labels));
    }
  }
  return builder.build();
}

std::vector<Word> enumerate_language(const Device& device, std::size_t max_length) {
  std::vector<Word> out;
  std::vector<std::pair<Word, StateSet>> layer{{Word{}, device.initials()}};
  out.push_back({});
  for (std::size_t length = 1; length <= max_length && !layer.empty(); ++length) {
    std::vector<std::pair<Word, StateSet>> next;
    for (const auto& [word, states] : layer) {
      for (const auto& symbol : device.observations()) {
        StateSet reached;
        for (StateId state : states) {
          for (StateId to : device.successors(state, symbol)) reached.insert(to);
        }
        if (reached.empty()) continue;
        Word extended = word;
        extended.push_back(symbol);
        out.push_back(extended);
        next.emplace_back(std::move(extended), std::move(reached));
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace eventify
