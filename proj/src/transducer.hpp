#pragma once

// Finite-state transducers over interned symbols. Every relation kind has an
// exact (untruncated) transducer; compositions are built by the usual
// product construction.

#include <map>
#include <set>
#include <vector>

#include "eventify/relation.hpp"

namespace eventify::detail {

class SymbolTable {
 public:
  int intern(const Symbol& symbol);
  const Symbol& symbol(int id) const { return symbols_.at(static_cast<std::size_t>(id)); }
  /// Id of an interned symbol, or -2 when unknown.
  int find(const Symbol& symbol) const;

 private:
  std::map<Symbol, int> ids_;
  std::vector<Symbol> symbols_;
};

/// Marks the empty side of an arc.
inline constexpr int kSilent = -1;

struct Transducer {
  struct Arc {
    int input;
    int output;
    int target;
  };

  std::vector<std::vector<Arc>> arcs;
  std::vector<bool> accepting;
  std::vector<int> initial;
  std::set<int> outputs;

  int add_state(bool accept);
  void add_arc(int from, int input, int output, int to);
  int size() const { return static_cast<int>(arcs.size()); }
};

/// Transducer for `spec` reading strings over `inputs`.
Transducer compile(const RelationSpec& spec, const std::set<int>& inputs, SymbolTable& table);

/// Relation `first` followed by `second`.
Transducer compose(const Transducer& first, const Transducer& second);

}  // namespace eventify::detail
