#include "helpers.hpp"

#include <deque>
#include <map>

namespace eventify::support {

bool isomorphic(const Device& a, const Device& b) {
  if (!is_deterministic(a) || !is_deterministic(b)) return false;
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.observations() != b.observations()) return false;
  std::map<StateId, StateId> forward;
  std::map<StateId, StateId> backward;
  std::deque<std::pair<StateId, StateId>> queue{{*a.initials().begin(), *b.initials().begin()}};
  forward[queue.front().first] = queue.front().second;
  backward[queue.front().second] = queue.front().first;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    if (a.output(x) != b.output(y)) return false;
    if (a.outgoing_labels(x) != b.outgoing_labels(y)) return false;
    for (const auto& label : a.outgoing_labels(x)) {
      StateId nx = a.successors(x, label).front();
      StateId ny = b.successors(y, label).front();
      auto fx = forward.find(nx);
      auto by = backward.find(ny);
      if (fx == forward.end() && by == backward.end()) {
        forward[nx] = ny;
        backward[ny] = nx;
        queue.emplace_back(nx, ny);
      } else if (fx == forward.end() || by == backward.end() || fx->second != ny) {
        return false;
      }
    }
  }
  return forward.size() == a.reachable().size() && backward.size() == b.reachable().size();
}

SymbolSet random_subset(std::mt19937_64& rng, const SymbolSet& from) {
  SymbolSet out;
  std::bernoulli_distribution coin(0.5);
  for (const auto& symbol : from) {
    if (coin(rng)) out.insert(symbol);
  }
  return out;
}

std::set<Word> delta_images(const Variator& variator, const Word& source) {
  if (source.empty()) return {Word{}};
  std::set<Word> images{Word{source.front()}};
  for (std::size_t i = 1; i < source.size(); ++i) {
    std::set<Word> next;
    for (const auto& [before, difference, after] : variator.triples) {
      if (before != source[i - 1] || after != source[i]) continue;
      for (auto image : images) {
        image.push_back(difference);
        next.insert(std::move(image));
      }
    }
    images = std::move(next);
  }
  return images;
}

}  // namespace eventify::support
