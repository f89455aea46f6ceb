#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eventify {

using Symbol = std::string;
using SymbolSet = std::set<Symbol>;
using Word = std::vector<Symbol>;
using StateId = std::size_t;
using StateSet = std::set<StateId>;

/// Thrown when a device, variator or monoid breaks a structural invariant.
class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Encodes a pair of symbols as a single symbol "(a,b)". Products of devices
/// and of variators both use this encoding so that their alphabets line up.
Symbol pair_symbol(const Symbol& first, const Symbol& second);

/// Renders a word with symbols separated by spaces; "ε" for the empty word.
std::string format_word(const Word& word);

/// Renders a set as "{a,b,c}".
std::string format_set(const SymbolSet& set);

/// A finite transition system whose edges carry sets of observations and
/// whose states carry nonempty sets of outputs.
///
/// States are kept sorted by name, so two devices built from the same data
/// compare equal regardless of insertion order. Instances are immutable; use
/// DeviceBuilder to make one.
class Device {
 public:
  struct Edge {
    StateId from;
    StateId to;
    SymbolSet labels;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(StateId state) const { return names_.at(state); }
  std::optional<StateId> find(std::string_view name) const;

  const StateSet& initials() const { return initials_; }
  const SymbolSet& observations() const { return observations_; }
  const SymbolSet& output_alphabet() const { return output_alphabet_; }
  const SymbolSet& output(StateId state) const { return outputs_.at(state); }

  /// Outgoing edges of a state keyed by target, labels merged per target.
  const std::map<StateId, SymbolSet>& out_edges(StateId state) const { return edges_.at(state); }
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// Targets reachable from `state` by reading `symbol`.
  std::vector<StateId> successors(StateId state, const Symbol& symbol) const;
  SymbolSet outgoing_labels(StateId state) const;

  /// States reachable from the initial states by any string.
  StateSet reachable() const;

  friend bool operator==(const Device&, const Device&) = default;

 private:
  friend class DeviceBuilder;
  Device() = default;

  std::vector<std::string> names_;
  StateSet initials_;
  SymbolSet observations_;
  SymbolSet output_alphabet_;
  std::vector<SymbolSet> outputs_;
  std::vector<std::map<StateId, SymbolSet>> edges_;
};

/// Accumulates states, edges and alphabets, then validates them into a
/// Device. Edge labels and state outputs are added to the declared alphabets
/// automatically; parsers that need strict alphabet checks do them first.
class DeviceBuilder {
 public:
  DeviceBuilder& add_state(const std::string& name, SymbolSet outputs);
  DeviceBuilder& add_initial(const std::string& name);
  /// Parallel edges between the same pair are merged by label union.
  DeviceBuilder& add_edge(const std::string& from, const std::string& to, SymbolSet labels);
  DeviceBuilder& add_observations(const SymbolSet& symbols);
  DeviceBuilder& add_outputs(const SymbolSet& symbols);

  bool has_state(const std::string& name) const { return states_.contains(name); }

  /// Throws InvalidModel if there is no initial state, an edge or initial
  /// names an unknown state, or some state has an empty output set.
  Device build() const;

 private:
  std::map<std::string, SymbolSet> states_;
  std::set<std::string> initials_;
  std::map<std::pair<std::string, std::string>, SymbolSet> edges_;
  SymbolSet observations_;
  SymbolSet outputs_;
};

/// States reached from any initial state by reading `word`. The empty set
/// means the word crashes.
StateSet trace(const Device& device, const Word& word);

bool language_contains(const Device& device, const Word& word);

/// Union of the outputs of every state reached by `word`.
SymbolSet outputs_of(const Device& device, const Word& word);

bool is_deterministic(const Device& device);

/// Picks one output from a state's output set.
using OutputChooser = std::function<Symbol(const std::string& state, const SymbolSet& outputs)>;

/// Chooses the lexicographically smallest output.
Symbol lexicographic_choice(const std::string& state, const SymbolSet& outputs);

/// Same structure with each output set replaced by the chooser's singleton.
Device singleton_restrict(const Device& device, const OutputChooser& chooser = lexicographic_choice);

/// Synchronous product. States, observations and outputs are pairs encoded
/// with pair_symbol.
Device direct_product(const Device& first, const Device& second);

/// All words of length at most `max_length` in the device's language,
/// shortest first and lexicographic within a length.
std::vector<Word> enumerate_language(const Device& device, std::size_t max_length);

}  // namespace eventify
