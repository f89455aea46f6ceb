#include "eventify/simulation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <utility>

#include "subset.hpp"
#include "transducer.hpp"

namespace eventify {

std::string to_string(Witness::Reason reason) {
  switch (reason) {
    case Witness::Reason::Crash:
      return "crash";
    case Witness::Reason::OutputViolation:
      return "output-violation";
    case Witness::Reason::NoImage:
      return "no-image";
    case Witness::Reason::UnstableEdge:
      return "unstable-edge";
  }
  return "unknown";
}

std::string to_string(Verdict::Status status) {
  switch (status) {
    case Verdict::Status::Holds:
      return "holds";
    case Verdict::Status::HoldsUpToBound:
      return "holds-up-to-bound";
    case Verdict::Status::Fails:
      return "fails";
  }
  return "unknown";
}

std::string describe(const Verdict& verdict) {
  std::string out = to_string(verdict.status());
  if (verdict.status() == Verdict::Status::HoldsUpToBound) out += " " + std::to_string(verdict.bound());
  if (const auto& w = verdict.witness()) {
    out += ": " + to_string(w->reason) + " source=" + format_word(w->source) + " image=" + format_word(w->image);
    if (!w->detail.empty()) out += " (" + w->detail + ")";
  }
  return out;
}

namespace {

bool subset_of(const SymbolSet& inner, const SymbolSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

struct Config {
  StateId state;
  int node;
  auto operator<=>(const Config&) const = default;
};

/// Configurations reached by an image prefix, each with a shortest source.
using Frontier = std::map<Config, Word>;

std::vector<Config> key_of(const Frontier& frontier) {
  std::vector<Config> key;
  key.reserve(frontier.size());
  for (const auto& [config, source] : frontier) key.push_back(config);
  return key;
}

/// The reference device run in lockstep with a relation's transducer: after
/// an image prefix t, the frontier holds every (state, transducer node) pair
/// some source s can reach while the transducer writes t.
class Product {
 public:
  Product(const Device& reference, const RelationSpec& spec) : reference_(detail::deterministic_view(reference)) {
    std::set<int> inputs;
    for (const auto& y : reference_.observations()) inputs.insert(table_.intern(y));
    transducer_ = detail::compile(spec, inputs, table_);
    for (int symbol : transducer_.outputs) image_symbols_.push_back(symbol);
    std::sort(image_symbols_.begin(), image_symbols_.end(),
              [&](int a, int b) { return table_.symbol(a) < table_.symbol(b); });
  }

  const Device& reference() const { return reference_; }
  const std::vector<int>& image_symbols() const { return image_symbols_; }
  const Symbol& symbol(int id) const { return table_.symbol(id); }

  Frontier start() const {
    Frontier frontier;
    for (StateId state : reference_.initials()) {
      for (int node : transducer_.initial) frontier.emplace(Config{state, node}, Word{});
    }
    return closure(std::move(frontier));
  }

  Frontier step(const Frontier& frontier, int image_symbol) const {
    Frontier next;
    for (const auto& [config, source] : frontier) {
      for (const auto& arc : arcs(config.node)) {
        if (arc.output == image_symbol) advance(config, source, arc, next);
      }
    }
    return closure(std::move(next));
  }

  bool complete(const Config& config) const { return transducer_.accepting[static_cast<std::size_t>(config.node)]; }

  /// Shortest source string in L(reference) with no image, if any within
  /// `max_length`. `exhausted` reports whether every source was covered.
  std::optional<Word> source_without_image(std::size_t max_length, bool& exhausted) const {
    using Nodes = std::set<int>;
    struct Item {
      StateId state;
      Nodes nodes;
      Word source;
    };
    exhausted = true;
    std::set<std::pair<StateId, Nodes>> seen;
    std::deque<Item> queue;
    for (StateId state : reference_.initials()) {
      Nodes nodes = read_closure(Nodes(transducer_.initial.begin(), transducer_.initial.end()));
      if (!accepts(nodes)) return Word{};
      if (seen.emplace(state, nodes).second) queue.push_back({state, std::move(nodes), {}});
    }
    while (!queue.empty()) {
      Item item = std::move(queue.front());
      queue.pop_front();
      for (const auto& y : reference_.observations()) {
        auto targets = reference_.successors(item.state, y);
        if (targets.empty()) continue;
        if (item.source.size() == max_length) {
          exhausted = false;
          break;
        }
        Nodes nodes;
        int id = table_.find(y);
        for (int node : item.nodes) {
          for (const auto& arc : arcs(node)) {
            if (arc.input == id) nodes.insert(arc.target);
          }
        }
        nodes = read_closure(std::move(nodes));
        Word source = item.source;
        source.push_back(y);
        if (!accepts(nodes)) return source;
        for (StateId to : targets) {
          if (seen.emplace(to, nodes).second) queue.push_back({to, nodes, source});
        }
      }
    }
    return std::nullopt;
  }

 private:
  const std::vector<detail::Transducer::Arc>& arcs(int node) const {
    return transducer_.arcs[static_cast<std::size_t>(node)];
  }

  void advance(const Config& config, const Word& source, const detail::Transducer::Arc& arc, Frontier& into) const {
    if (arc.input == detail::kSilent) {
      into.emplace(Config{config.state, arc.target}, source);
      return;
    }
    const auto& y = table_.symbol(arc.input);
    for (StateId to : reference_.successors(config.state, y)) {
      Word extended = source;
      extended.push_back(y);
      into.emplace(Config{to, arc.target}, std::move(extended));
    }
  }

  Frontier closure(Frontier frontier) const {
    std::deque<Config> queue;
    for (const auto& [config, source] : frontier) queue.push_back(config);
    while (!queue.empty()) {
      Config config = queue.front();
      queue.pop_front();
      const Word source = frontier.at(config);
      for (const auto& arc : arcs(config.node)) {
        if (arc.output != detail::kSilent) continue;
        Frontier fresh;
        advance(config, source, arc, fresh);
        for (auto& [next, word] : fresh) {
          if (frontier.emplace(next, std::move(word)).second) queue.push_back(next);
        }
      }
    }
    return frontier;
  }

  std::set<int> read_closure(std::set<int> nodes) const {
    std::deque<int> queue(nodes.begin(), nodes.end());
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop_front();
      for (const auto& arc : arcs(node)) {
        if (arc.input == detail::kSilent && nodes.insert(arc.target).second) queue.push_back(arc.target);
      }
    }
    return nodes;
  }

  bool accepts(const std::set<int>& nodes) const {
    return std::any_of(nodes.begin(), nodes.end(),
                       [&](int node) { return transducer_.accepting[static_cast<std::size_t>(node)]; });
  }

  Device reference_;
  detail::SymbolTable table_;
  detail::Transducer transducer_;
  std::vector<int> image_symbols_;
};

Witness make_witness(Witness::Reason reason, Word source, Word image, std::string detail = {}) {
  Witness witness;
  witness.reason = reason;
  witness.source = std::move(source);
  witness.image = std::move(image);
  witness.detail = std::move(detail);
  return witness;
}

StateSet step_states(const Device& device, const StateSet& states, const Symbol& symbol) {
  StateSet next;
  for (StateId state : states) {
    for (StateId to : device.successors(state, symbol)) next.insert(to);
  }
  return next;
}

SymbolSet outputs_at(const Device& device, const StateSet& states) {
  SymbolSet out;
  for (StateId state : states) out.insert(device.output(state).begin(), device.output(state).end());
  return out;
}

}  // namespace

Verdict check_output_simulation_exact(const Device& candidate, const Device& reference, const RelationSpec& spec) {
  Product product(reference, spec);
  bool exhausted = true;
  if (auto missing = product.source_without_image(std::numeric_limits<std::size_t>::max(), exhausted)) {
    return Verdict::fails(make_witness(Witness::Reason::NoImage, *missing, {}, "source has no image"));
  }
  const Device& ref = product.reference();

  struct Item {
    StateSet states;
    Frontier frontier;
    Word image;
  };
  std::set<std::pair<StateSet, std::vector<Config>>> seen;
  std::deque<Item> queue;
  Frontier start = product.start();
  seen.emplace(candidate.initials(), key_of(start));
  queue.push_back({candidate.initials(), std::move(start), {}});
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    SymbolSet produced = outputs_at(candidate, item.states);
    for (const auto& [config, source] : item.frontier) {
      if (!product.complete(config)) continue;
      if (item.states.empty()) {
        return Verdict::fails(make_witness(Witness::Reason::Crash, source, item.image, "image is not accepted"));
      }
      if (!subset_of(produced, ref.output(config.state))) {
        return Verdict::fails(make_witness(Witness::Reason::OutputViolation, source, item.image,
                                           format_set(produced) + " not within " + format_set(ref.output(config.state))));
      }
    }
    for (int id : product.image_symbols()) {
      Frontier next = product.step(item.frontier, id);
      if (next.empty()) continue;
      StateSet states = step_states(candidate, item.states, product.symbol(id));
      if (!seen.emplace(states, key_of(next)).second) continue;
      Word image = item.image;
      image.push_back(product.symbol(id));
      queue.push_back({std::move(states), std::move(next), std::move(image)});
    }
  }
  return Verdict::holds();
}

Verdict check_output_simulation(const Device& candidate, const Device& reference, const RelationSpec& spec,
                                std::size_t max_source_length) {
  for (const auto& source : enumerate_language(reference, max_source_length)) {
    auto images = relation_image(spec, source);
    if (images.empty()) {
      return Verdict::fails(make_witness(Witness::Reason::NoImage, source, {}, "source has no image"));
    }
    std::vector<Word> ordered(images.begin(), images.end());
    std::sort(ordered.begin(), ordered.end(), shortlex_less);
    SymbolSet allowed = outputs_of(reference, source);
    for (const auto& image : ordered) {
      SymbolSet produced = outputs_of(candidate, image);
      if (produced.empty()) {
        return Verdict::fails(make_witness(Witness::Reason::Crash, source, image, "image is not accepted"));
      }
      if (!subset_of(produced, allowed)) {
        return Verdict::fails(make_witness(Witness::Reason::OutputViolation, source, image,
                                           format_set(produced) + " not within " + format_set(allowed)));
      }
    }
  }
  if (spec.truncated()) return Verdict::holds_up_to(max_source_length);
  return check_output_simulation_exact(candidate, reference, spec);
}

namespace {

/// Reachable states of a deterministic device with a shortest reaching word.
std::vector<std::pair<StateId, Word>> reachable_with_paths(const Device& f) {
  std::vector<std::pair<StateId, Word>> out;
  std::set<StateId> seen;
  for (StateId start : f.initials()) {
    if (seen.insert(start).second) out.emplace_back(start, Word{});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& y : f.observations()) {
      for (StateId to : f.successors(out[i].first, y)) {
        if (!seen.insert(to).second) continue;
        Word path = out[i].second;
        path.push_back(y);
        out.emplace_back(to, std::move(path));
      }
    }
  }
  return out;
}

template <typename Unstable>
Verdict check_neutral_edges(const Device& f, const SymbolSet& neutral, Witness::Reason reason, Unstable unstable) {
  if (!is_deterministic(f)) throw InvalidModel("stability is only defined for deterministic devices");
  for (const auto& [state, path] : reachable_with_paths(f)) {
    for (const auto& n : neutral) {
      for (StateId to : f.successors(state, n)) {
        if (auto detail = unstable(state, to)) {
          Word word = path;
          word.push_back(n);
          return Verdict::fails(make_witness(reason, word, word, *detail));
        }
      }
    }
  }
  return Verdict::holds();
}

}  // namespace

Verdict check_vertex_stable(const Device& f, const SymbolSet& neutral) {
  return check_neutral_edges(f, neutral, Witness::Reason::UnstableEdge,
                             [&](StateId from, StateId to) -> std::optional<std::string> {
                               if (from == to) return std::nullopt;
                               return "moves from " + f.name(from) + " to " + f.name(to);
                             });
}

Verdict check_output_stable(const Device& f, const SymbolSet& neutral) {
  return check_neutral_edges(f, neutral, Witness::Reason::OutputViolation,
                             [&](StateId from, StateId to) -> std::optional<std::string> {
                               const auto& before = f.output(from);
                               const auto& after = f.output(to);
                               if (before == after && after.size() == 1) return std::nullopt;
                               return "outputs " + format_set(before) + " then " + format_set(after);
                             });
}

OracleResult derivative_exists(const Device& reference, const RelationSpec& spec, std::size_t max_image_length) {
  Product product(reference, spec);
  OracleResult result;
  if (auto missing = product.source_without_image(max_image_length, result.exhausted)) {
    result.exists = false;
    result.exhausted = true;
    result.obstruction = Obstruction{Obstruction::Kind::NoImage, {}, {*missing}, {outputs_of(reference, *missing)}};
    return result;
  }
  const Device& ref = product.reference();

  std::set<std::vector<Config>> seen;
  std::deque<std::pair<Word, Frontier>> queue;
  Frontier start = product.start();
  seen.insert(key_of(start));
  queue.emplace_back(Word{}, std::move(start));
  while (!queue.empty()) {
    auto [image, frontier] = std::move(queue.front());
    queue.pop_front();
    std::optional<SymbolSet> common;
    std::vector<std::pair<Word, StateId>> members;
    for (const auto& [config, source] : frontier) {
      if (!product.complete(config)) continue;
      members.emplace_back(source, config.state);
      const auto& outputs = ref.output(config.state);
      if (!common) {
        common = outputs;
      } else {
        SymbolSet kept;
        for (const auto& symbol : *common) {
          if (outputs.contains(symbol)) kept.insert(symbol);
        }
        common = std::move(kept);
      }
    }
    if (common && common->empty()) {
      Obstruction obstruction{Obstruction::Kind::OutputConflict, image, {}, {}};
      std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
      std::set<Word> listed;
      for (const auto& [source, state] : members) {
        if (!listed.insert(source).second) continue;
        obstruction.sources.push_back(source);
        obstruction.outputs.push_back(ref.output(state));
      }
      result.exists = false;
      result.exhausted = true;
      result.obstruction = std::move(obstruction);
      return result;
    }
    for (int id : product.image_symbols()) {
      Frontier next = product.step(frontier, id);
      if (next.empty()) continue;
      if (image.size() == max_image_length) {
        result.exhausted = false;
        break;
      }
      if (!seen.insert(key_of(next)).second) continue;
      Word extended = image;
      extended.push_back(product.symbol(id));
      queue.emplace_back(std::move(extended), std::move(next));
    }
  }
  return result;
}

OracleResult brute_force_derivative_exists(const Device& f, const Variator& variator, std::size_t bound) {
  return derivative_exists(f, RelationSpec::delta(variator), bound);
}

}  // namespace eventify
