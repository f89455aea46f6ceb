#include "transducer.hpp"

#include <deque>
#include <utility>

namespace eventify::detail {

int SymbolTable::intern(const Symbol& symbol) {
  auto [it, inserted] = ids_.emplace(symbol, static_cast<int>(symbols_.size()));
  if (inserted) symbols_.push_back(symbol);
  return it->second;
}

int SymbolTable::find(const Symbol& symbol) const {
  auto it = ids_.find(symbol);
  return it == ids_.end() ? -2 : it->second;
}

int Transducer::add_state(bool accept) {
  arcs.emplace_back();
  accepting.push_back(accept);
  return size() - 1;
}

void Transducer::add_arc(int from, int input, int output, int to) {
  arcs[static_cast<std::size_t>(from)].push_back({input, output, to});
  if (output != kSilent) outputs.insert(output);
}

namespace {

using R = RelationSpec;

Transducer identity(const std::set<int>& inputs) {
  Transducer t;
  int q = t.add_state(true);
  t.initial = {q};
  for (int a : inputs) t.add_arc(q, a, a, q);
  return t;
}

Transducer delta(const Variator& variator, const std::set<int>& inputs, SymbolTable& table) {
  Transducer t;
  int start = t.add_state(true);
  t.initial = {start};
  std::map<int, int> last;
  for (int y : inputs) last[y] = t.add_state(true);
  for (int y : inputs) t.add_arc(start, y, y, last[y]);
  for (const auto& [before, difference, after] : variator.triples) {
    int from = table.intern(before);
    int to = table.intern(after);
    if (!last.contains(from) || !last.contains(to)) continue;
    t.add_arc(last[from], to, table.intern(difference), last[to]);
  }
  return t;
}

Transducer shave(std::size_t count, const std::set<int>& inputs) {
  Transducer t;
  std::vector<int> dropped;
  for (std::size_t i = 0; i <= count; ++i) dropped.push_back(t.add_state(true));
  t.initial = {dropped.front()};
  for (int a : inputs) {
    for (std::size_t i = 0; i < count; ++i) t.add_arc(dropped[i], a, kSilent, dropped[i + 1]);
    t.add_arc(dropped.back(), a, a, dropped.back());
  }
  return t;
}

Transducer shrink(const SymbolSet& neutral, const std::set<int>& inputs, const SymbolTable& table) {
  Transducer t;
  int q = t.add_state(true);
  t.initial = {q};
  for (int a : inputs) t.add_arc(q, a, neutral.contains(table.symbol(a)) ? kSilent : a, q);
  return t;
}

Transducer pump(const SymbolSet& neutral, const std::set<int>& inputs, SymbolTable& table) {
  Transducer t;
  int start = t.add_state(true);
  int body = t.add_state(true);
  t.initial = {start};
  for (int a : inputs) {
    t.add_arc(start, a, a, body);
    t.add_arc(body, a, a, body);
  }
  for (const auto& n : neutral) t.add_arc(body, kSilent, table.intern(n), body);
  return t;
}

Transducer integrator(const MonoidVariator& monoid, const std::set<int>& inputs, SymbolTable& table) {
  Transducer t;
  int start = t.add_state(true);
  int first = t.add_state(true);
  int done = t.add_state(true);
  t.initial = {start};
  std::map<Symbol, int> running;
  for (const auto& element : monoid.elements) running[element] = t.add_state(false);
  for (int a : inputs) t.add_arc(start, a, a, first);
  for (int a : inputs) {
    const auto& d = table.symbol(a);
    if (!monoid.contains(d)) continue;
    t.add_arc(first, a, kSilent, running[d]);
    for (const auto& element : monoid.elements) t.add_arc(running[element], a, kSilent, running[monoid.combine(element, d)]);
  }
  for (const auto& element : monoid.elements) t.add_arc(running[element], kSilent, table.intern(element), done);
  return t;
}

Transducer disaggregator(const MonoidVariator& monoid, const std::set<int>& inputs, SymbolTable& table) {
  Transducer t;
  int start = t.add_state(true);
  t.initial = {start};
  // State (read total, written total, read any, written any).
  std::map<std::tuple<Symbol, Symbol, bool, bool>, int> states;
  std::deque<std::tuple<Symbol, Symbol, bool, bool>> queue;
  auto state_of = [&](const std::tuple<Symbol, Symbol, bool, bool>& key) {
    auto it = states.find(key);
    if (it != states.end()) return it->second;
    const auto& [read, written, any_read, any_written] = key;
    bool accept = (!any_read && !any_written) || (any_read && any_written && read == written);
    int id = t.add_state(accept);
    states.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  int first = state_of({monoid.identity, monoid.identity, false, false});
  for (int a : inputs) t.add_arc(start, a, a, first);
  while (!queue.empty()) {
    auto key = queue.front();
    queue.pop_front();
    int from = states.at(key);
    const auto& [read, written, any_read, any_written] = key;
    for (int a : inputs) {
      const auto& d = table.symbol(a);
      if (!monoid.contains(d)) continue;
      int to = state_of({monoid.combine(read, d), written, true, any_written});
      t.add_arc(from, a, kSilent, to);
    }
    for (const auto& e : monoid.elements) {
      int to = state_of({read, monoid.combine(written, e), any_read, true});
      t.add_arc(from, kSilent, table.intern(e), to);
    }
  }
  return t;
}

}  // namespace

Transducer compile(const RelationSpec& spec, const std::set<int>& inputs, SymbolTable& table) {
  return std::visit(
      [&](const auto& kind) -> Transducer {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, R::Identity>) {
          return identity(inputs);
        } else if constexpr (std::is_same_v<K, R::Delta>) {
          return delta(kind.variator, inputs, table);
        } else if constexpr (std::is_same_v<K, R::Shave>) {
          return shave(kind.count, inputs);
        } else if constexpr (std::is_same_v<K, R::Shrink>) {
          return shrink(kind.neutral, inputs, table);
        } else if constexpr (std::is_same_v<K, R::Pump>) {
          return pump(kind.neutral, inputs, table);
        } else if constexpr (std::is_same_v<K, R::Integrator>) {
          return integrator(kind.monoid, inputs, table);
        } else if constexpr (std::is_same_v<K, R::Disaggregator>) {
          return disaggregator(kind.monoid, inputs, table);
        } else {
          Transducer chain = compile(kind.parts.front(), inputs, table);
          for (std::size_t i = 1; i < kind.parts.size(); ++i) {
            chain = compose(chain, compile(kind.parts[i], chain.outputs, table));
          }
          return chain;
        }
      },
      spec.kind());
}

Transducer compose(const Transducer& first, const Transducer& second) {
  Transducer out;
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> queue;
  auto id_of = [&](int a, int b) {
    auto [it, inserted] = ids.emplace(std::pair{a, b}, 0);
    if (inserted) {
      it->second = out.add_state(first.accepting[static_cast<std::size_t>(a)] &&
                                 second.accepting[static_cast<std::size_t>(b)]);
      queue.emplace_back(a, b);
    }
    return it->second;
  };
  for (int a : first.initial) {
    for (int b : second.initial) out.initial.push_back(id_of(a, b));
  }
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    int from = ids.at({a, b});
    for (const auto& arc : first.arcs[static_cast<std::size_t>(a)]) {
      if (arc.output == kSilent) {
        out.add_arc(from, arc.input, kSilent, id_of(arc.target, b));
        continue;
      }
      for (const auto& next : second.arcs[static_cast<std::size_t>(b)]) {
        if (next.input == arc.output) out.add_arc(from, arc.input, next.output, id_of(arc.target, next.target));
      }
    }
    for (const auto& next : second.arcs[static_cast<std::size_t>(b)]) {
      if (next.input == kSilent) out.add_arc(from, kSilent, next.output, id_of(a, next.target));
    }
  }
  return out;
}

}  // namespace eventify::detail
