#include "eventify/ovm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "eventify/transforms.hpp"
#include "split.hpp"
#include "subset.hpp"

namespace eventify {

void Graph::add_edge(const std::string& a, const std::string& b) {
  if (a == b) throw InvalidModel("self-loop on vertex '" + a + "'");
  vertices.insert(a);
  vertices.insert(b);
  edges.emplace(std::min(a, b), std::max(a, b));
}

namespace {

bool disjoint(const SymbolSet& a, const SymbolSet& b) {
  return std::none_of(a.begin(), a.end(), [&](const Symbol& s) { return b.contains(s); });
}

std::string difference_name(int index) { return "d" + std::to_string(index); }

}  // namespace

std::optional<Variator> minimize_variator(const Device& input, std::size_t n) {
  if (n == 0) return std::nullopt;
  Device f = detail::deterministic_view(input);
  auto nodes = detail::split_device(f);

  using Pair = std::pair<Symbol, Symbol>;
  std::map<Pair, int> index;
  std::vector<Pair> pairs;
  for (const auto& node : nodes) {
    if (!node.entered_by) continue;
    for (const auto& [label, to] : node.arcs) {
      auto [it, inserted] = index.emplace(Pair{*node.entered_by, label}, static_cast<int>(pairs.size()));
      if (inserted) pairs.push_back(it->first);
    }
  }

  // Two pairs leaving the same node toward output-disjoint states can never
  // share a difference: the determinized result would merge the targets.
  std::vector<std::set<int>> clashes(pairs.size());
  for (const auto& node : nodes) {
    if (!node.entered_by) continue;
    for (std::size_t i = 0; i < node.arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < node.arcs.size(); ++j) {
        const auto& [a, to_a] = node.arcs[i];
        const auto& [b, to_b] = node.arcs[j];
        if (!disjoint(f.output(nodes[to_a].state), f.output(nodes[to_b].state))) continue;
        int p = index.at({*node.entered_by, a});
        int q = index.at({*node.entered_by, b});
        clashes[static_cast<std::size_t>(p)].insert(q);
        clashes[static_cast<std::size_t>(q)].insert(p);
      }
    }
  }

  std::vector<int> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return clashes[static_cast<std::size_t>(a)].size() > clashes[static_cast<std::size_t>(b)].size();
  });

  auto variator_for = [&](const std::vector<int>& assigned) {
    Variator v;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      std::string d = difference_name(assigned[i]);
      v.differences.insert(d);
      v.triples.emplace(pairs[i].first, d, pairs[i].second);
    }
    return v;
  };

  std::vector<int> assigned(pairs.size(), -1);
  std::optional<Variator> found;
  const int limit = static_cast<int>(std::min<std::size_t>(n, pairs.size() + 1));
  // Differences are interchangeable, so a new index is only opened right
  // after the largest one used so far.
  std::function<bool(std::size_t, int)> search = [&](std::size_t depth, int used) {
    if (depth == order.size()) {
      Variator candidate = variator_for(assigned);
      if (delta_transform(f, candidate).ok()) {
        found = std::move(candidate);
        return true;
      }
      return false;
    }
    auto pair = static_cast<std::size_t>(order[depth]);
    for (int d = 0; d < std::min(used + 1, limit); ++d) {
      bool clash = std::any_of(clashes[pair].begin(), clashes[pair].end(),
                               [&](int other) { return assigned[static_cast<std::size_t>(other)] == d; });
      if (clash) continue;
      assigned[pair] = d;
      if (search(depth + 1, std::max(used, d + 1))) return true;
      assigned[pair] = -1;
    }
    return false;
  };
  search(0, 0);
  return found;
}

std::optional<std::size_t> exact_min_cardinality(const Device& f, std::size_t cap) {
  for (std::size_t n = 1; n <= cap; ++n) {
    if (minimize_variator(f, n)) return n;
  }
  return std::nullopt;
}

Device reduce_3coloring(const Graph& graph) {
  Symbol separator = "x";
  while (graph.vertices.contains(separator)) separator += "'";

  DeviceBuilder builder;
  builder.add_outputs({"0", "1", "2"}).add_observations(SymbolSet(graph.vertices.begin(), graph.vertices.end()));
  builder.add_observations({separator});
  builder.add_state("v0", {"0"}).add_initial("v0");

  std::string previous_tails[2] = {"v0", ""};
  std::size_t k = 1;
  for (const auto& [v, w] : graph.edges) {
    std::string tag = "[" + std::to_string(k) + "]";
    std::string head = "h" + tag;
    builder.add_state(head, {"0"});
    for (const auto& tail : previous_tails) {
      if (!tail.empty()) builder.add_edge(tail, head, {separator});
    }
    const std::string branch[2] = {v, w};
    for (int i = 0; i < 2; ++i) {
      std::string middle = "m" + std::to_string(i + 1) + tag;
      std::string tail = "t" + std::to_string(i + 1) + tag;
      builder.add_state(middle, {std::to_string(i + 1)}).add_state(tail, {"0"});
      builder.add_edge(head, middle, {branch[i]}).add_edge(middle, tail, {branch[i]});
      previous_tails[i] = tail;
    }
    ++k;
  }
  return builder.build();
}

bool graph_3colorable_bruteforce(const Graph& graph) {
  if (graph.vertices.size() > 12) throw std::invalid_argument("brute-force coloring is limited to 12 vertices");
  std::vector<std::string> names(graph.vertices.begin(), graph.vertices.end());
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < names.size(); ++i) position[names[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [a, b] : graph.edges) edges.emplace_back(position.at(a), position.at(b));

  std::vector<int> color(names.size(), 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < names.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (auto& c : color) {
      c = static_cast<int>(rest % 3);
      rest /= 3;
    }
    bool proper = std::all_of(edges.begin(), edges.end(), [&](const auto& e) { return color[e.first] != color[e.second]; });
    if (proper) return true;
  }
  return false;
}

}  // namespace eventify
