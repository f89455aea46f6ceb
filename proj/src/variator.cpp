#include "eventify/variator.hpp"

#include <algorithm>
#include <deque>

namespace eventify {

SymbolSet Variator::differences_between(const Symbol& before, const Symbol& after) const {
  SymbolSet out;
  for (auto it = triples.lower_bound({before, Symbol{}, Symbol{}}); it != triples.end(); ++it) {
    if (std::get<0>(*it) != before) break;
    if (std::get<2>(*it) == after) out.insert(std::get<1>(*it));
  }
  return out;
}

std::vector<Violation> validate_variator(const Variator& variator, const SymbolSet& observations) {
  std::vector<Violation> out;
  for (const auto& [before, difference, after] : variator.triples) {
    Word symbols{before, difference, after};
    if (!observations.contains(before)) {
      out.push_back({"unknown observation", "'" + before + "' is not an observation", symbols});
    }
    if (!variator.differences.contains(difference)) {
      out.push_back({"unknown difference", "'" + difference + "' is not a declared difference", symbols});
    }
    if (!observations.contains(after)) {
      out.push_back({"unknown observation", "'" + after + "' is not an observation", symbols});
    }
  }
  return out;
}

bool is_functional(const Variator& variator) {
  std::map<std::pair<Symbol, Symbol>, Symbol> seen;
  for (const auto& [before, difference, after] : variator.triples) {
    auto [it, inserted] = seen.emplace(std::pair{before, difference}, after);
    if (!inserted && it->second != after) return false;
  }
  return true;
}

bool is_pairwise_unique(const Variator& variator, const SymbolSet& observations) {
  for (const auto& before : observations) {
    for (const auto& after : observations) {
      if (variator.differences_between(before, after).size() != 1) return false;
    }
  }
  return true;
}

Variator product_variator(const Variator& first, const Variator& second) {
  Variator out;
  for (const auto& a : first.differences) {
    for (const auto& b : second.differences) out.differences.insert(pair_symbol(a, b));
  }
  for (const auto& [y1, d1, z1] : first.triples) {
    for (const auto& [y2, d2, z2] : second.triples) {
      out.triples.emplace(pair_symbol(y1, y2), pair_symbol(d1, d2), pair_symbol(z1, z2));
    }
  }
  return out;
}

const Symbol& MonoidVariator::combine(const Symbol& left, const Symbol& right) const {
  auto it = op.find({left, right});
  if (it == op.end()) throw InvalidModel("no product for (" + left + ", " + right + ")");
  return it->second;
}

const Symbol& MonoidVariator::act(const Symbol& observation, const Symbol& difference) const {
  auto it = action.find({observation, difference});
  if (it == action.end()) throw InvalidModel("no action for (" + observation + ", " + difference + ")");
  return it->second;
}

Symbol MonoidVariator::total(const Word& differences) const {
  Symbol acc = identity;
  for (const auto& d : differences) acc = combine(acc, d);
  return acc;
}

bool MonoidVariator::contains(const Symbol& element) const {
  return std::find(elements.begin(), elements.end(), element) != elements.end();
}

std::vector<Violation> validate_monoid(const MonoidVariator& m) {
  std::vector<Violation> out;
  if (!m.contains(m.identity)) {
    out.push_back({"identity", "identity '" + m.identity + "' is not an element", {m.identity}});
    return out;
  }
  bool total = true;
  for (const auto& a : m.elements) {
    for (const auto& b : m.elements) {
      auto it = m.op.find({a, b});
      if (it == m.op.end()) {
        out.push_back({"totality", "missing product " + a + " ⊕ " + b, {a, b}});
        total = false;
      } else if (!m.contains(it->second)) {
        out.push_back({"closure", a + " ⊕ " + b + " = " + it->second + " is not an element", {a, b}});
        total = false;
      }
    }
  }
  for (const auto& y : m.observations) {
    for (const auto& d : m.elements) {
      auto it = m.action.find({y, d});
      if (it == m.action.end()) {
        out.push_back({"totality", "missing action " + y + " ⊲ " + d, {y, d}});
        total = false;
      } else if (!m.observations.contains(it->second)) {
        out.push_back({"closure", y + " ⊲ " + d + " = " + it->second + " is not an observation", {y, d}});
        total = false;
      }
    }
  }
  if (!total) return out;

  for (const auto& a : m.elements) {
    for (const auto& b : m.elements) {
      for (const auto& c : m.elements) {
        const auto& left = m.combine(m.combine(a, b), c);
        const auto& right = m.combine(a, m.combine(b, c));
        if (left != right) {
          out.push_back({"associativity",
                         "(" + a + " ⊕ " + b + ") ⊕ " + c + " = " + left + " but " + a + " ⊕ (" + b + " ⊕ " + c +
                             ") = " + right,
                         {a, b, c}});
        }
      }
    }
  }
  for (const auto& a : m.elements) {
    if (m.combine(m.identity, a) != a || m.combine(a, m.identity) != a) {
      out.push_back({"identity", m.identity + " is not a two-sided identity for " + a, {a}});
    }
  }
  for (const auto& y : m.observations) {
    if (m.act(y, m.identity) != y) {
      out.push_back({"action identity", y + " ⊲ " + m.identity + " = " + m.act(y, m.identity), {y}});
    }
    for (const auto& d1 : m.elements) {
      for (const auto& d2 : m.elements) {
        const auto& stepwise = m.act(m.act(y, d1), d2);
        const auto& combined = m.act(y, m.combine(d1, d2));
        if (stepwise != combined) {
          out.push_back({"compatibility",
                         "(" + y + " ⊲ " + d1 + ") ⊲ " + d2 + " = " + stepwise + " but " + y + " ⊲ (" + d1 + " ⊕ " +
                             d2 + ") = " + combined,
                         {y, d1, d2}});
        }
      }
    }
  }
  return out;
}

bool is_group_with_transitive_point(const MonoidVariator& m, const SymbolSet& observations) {
  for (const auto& a : m.elements) {
    bool invertible = std::any_of(m.elements.begin(), m.elements.end(), [&](const Symbol& b) {
      return m.combine(a, b) == m.identity && m.combine(b, a) == m.identity;
    });
    if (!invertible) return false;
  }
  for (const auto& start : observations) {
    SymbolSet orbit;
    for (const auto& d : m.elements) orbit.insert(m.act(start, d));
    if (orbit == observations) return true;
  }
  return false;
}

Variator variator_from_monoid(const MonoidVariator& m, const SymbolSet& observations) {
  Variator out;
  out.differences.insert(m.elements.begin(), m.elements.end());
  for (const auto& y : observations) {
    for (const auto& d : m.elements) out.triples.emplace(y, d, m.act(y, d));
  }
  return out;
}

}  // namespace eventify
