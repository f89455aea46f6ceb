#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eventify/device.hpp"

namespace eventify {

/// (before, difference, after)
using Triple = std::tuple<Symbol, Symbol, Symbol>;

/// A difference alphabet together with a relation saying which difference
/// may describe a move from one observation to the next.
struct Variator {
  SymbolSet differences;
  std::set<Triple> triples;

  /// Differences d with (before, d, after) in the relation.
  SymbolSet differences_between(const Symbol& before, const Symbol& after) const;

  friend bool operator==(const Variator&, const Variator&) = default;
};

struct Violation {
  std::string kind;
  std::string detail;
  /// The offending symbols, e.g. the triple (a, b, c) for associativity.
  Word symbols;
};

std::vector<Violation> validate_variator(const Variator& variator, const SymbolSet& observations);
bool is_functional(const Variator& variator);
bool is_pairwise_unique(const Variator& variator, const SymbolSet& observations);

/// Componentwise product; differences and observations are pair symbols.
Variator product_variator(const Variator& first, const Variator& second);

/// A finite monoid of differences with a right action on observations, both
/// stored as dense tables.
struct MonoidVariator {
  std::vector<Symbol> elements;
  Symbol identity;
  std::map<std::pair<Symbol, Symbol>, Symbol> op;
  SymbolSet observations;
  std::map<std::pair<Symbol, Symbol>, Symbol> action;

  /// Table lookups; throw InvalidModel on a missing entry.
  const Symbol& combine(const Symbol& left, const Symbol& right) const;
  const Symbol& act(const Symbol& observation, const Symbol& difference) const;
  /// Left-to-right product of a word of differences; the identity for ε.
  Symbol total(const Word& differences) const;
  bool contains(const Symbol& element) const;
};

/// Checks totality of both tables, associativity, the two-sided identity,
/// the action identity and compatibility. Each violation names its symbols.
std::vector<Violation> validate_monoid(const MonoidVariator& monoid);

/// True when every element has a two-sided inverse and some observation's
/// orbit is all of `observations`.
bool is_group_with_transitive_point(const MonoidVariator& monoid, const SymbolSet& observations);

/// {(y, d, y⊲d)} over the given observations.
Variator variator_from_monoid(const MonoidVariator& monoid, const SymbolSet& observations);

}  // namespace eventify
