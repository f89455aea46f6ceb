#include "eventify/random.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace eventify {

std::uint64_t seed_from_environment(std::uint64_t fallback) {
  const char* text = std::getenv("EVENTIFY_SEED");
  if (text == nullptr || *text == '\0') return fallback;
  char* end = nullptr;
  auto value = std::strtoull(text, &end, 10);
  return (end != nullptr && *end == '\0') ? value : fallback;
}

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t low, std::size_t high) {
  return std::uniform_int_distribution<std::size_t>(low, high)(rng);
}

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Device random_device(std::mt19937_64& rng, const RandomDeviceOptions& options) {
  std::size_t count = uniform(rng, options.min_states, options.max_states);
  DeviceBuilder builder;
  SymbolSet outputs;
  for (std::size_t i = 0; i < options.outputs; ++i) outputs.insert("c" + std::to_string(i));
  builder.add_outputs(outputs);
  for (std::size_t i = 0; i < options.observations; ++i) builder.add_observations({"y" + std::to_string(i)});
  for (std::size_t i = 0; i < count; ++i) {
    SymbolSet produced;
    while (produced.empty()) {
      for (const auto& c : outputs) {
        if (chance(rng, 0.5)) produced.insert(c);
      }
    }
    builder.add_state("s" + std::to_string(i), produced);
  }
  builder.add_initial("s0");
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t y = 0; y < options.observations; ++y) {
      if (!chance(rng, options.move_probability)) continue;
      builder.add_edge("s" + std::to_string(i), "s" + std::to_string(uniform(rng, 0, count - 1)),
                       {"y" + std::to_string(y)});
    }
  }
  return builder.build();
}

Variator random_functional_variator(std::mt19937_64& rng, const SymbolSet& observations, std::size_t max_differences,
                                    double coverage) {
  Variator variator;
  std::size_t count = uniform(rng, 1, max_differences);
  std::vector<Symbol> targets(observations.begin(), observations.end());
  for (std::size_t i = 0; i < count; ++i) variator.differences.insert("d" + std::to_string(i));
  for (const auto& before : observations) {
    for (const auto& d : variator.differences) {
      if (chance(rng, coverage)) variator.triples.emplace(before, d, targets[uniform(rng, 0, targets.size() - 1)]);
    }
  }
  return variator;
}

MonoidVariator random_transformation_monoid(std::mt19937_64& rng, const SymbolSet& observations,
                                            std::size_t max_elements) {
  using Map = std::vector<std::size_t>;
  std::vector<Symbol> points(observations.begin(), observations.end());
  const std::size_t n = points.size();
  Map identity(n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i;
  auto then = [](const Map& first, const Map& second) {
    Map out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
    return out;
  };

  std::vector<Map> elements;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Map> generators(uniform(rng, 1, 2));
    for (auto& g : generators) {
      g.resize(n);
      for (auto& target : g) target = uniform(rng, 0, n - 1);
    }
    std::vector<Map> closed{identity};
    std::map<Map, std::size_t> seen{{identity, 0}};
    for (std::size_t i = 0; i < closed.size() && closed.size() <= max_elements; ++i) {
      for (const auto& g : generators) {
        Map next = then(closed[i], g);
        if (seen.emplace(next, closed.size()).second) closed.push_back(next);
      }
    }
    if (closed.size() <= max_elements) {
      elements = std::move(closed);
      break;
    }
  }
  if (elements.empty()) elements = {identity};

  std::map<Map, Symbol> names;
  MonoidVariator monoid;
  monoid.identity = "id";
  monoid.observations = observations;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Symbol name = i == 0 ? monoid.identity : "g" + std::to_string(i);
    names[elements[i]] = name;
    monoid.elements.push_back(name);
  }
  for (const auto& a : elements) {
    for (const auto& b : elements) monoid.op[{names[a], names[b]}] = names.at(then(a, b));
    for (std::size_t i = 0; i < n; ++i) monoid.action[{points[i], names[a]}] = points[a[i]];
  }
  return monoid;
}

Graph random_graph(std::mt19937_64& rng, std::size_t vertices, double edge_probability) {
  Graph graph;
  for (std::size_t i = 1; i <= vertices; ++i) graph.vertices.insert("v" + std::to_string(i));
  for (std::size_t i = 1; i <= vertices; ++i) {
    for (std::size_t j = i + 1; j <= vertices; ++j) {
      if (chance(rng, edge_probability)) graph.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    }
  }
  return graph;
}

}  // namespace eventify
