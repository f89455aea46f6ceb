#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "eventify/device.hpp"
#include "eventify/variator.hpp"

namespace eventify {

/// Symbolic description of a relation between strings.
class RelationSpec {
 public:
  struct Identity {};
  /// First symbol kept, each later symbol replaced by a difference from its
  /// predecessor.
  struct Delta {
    Variator variator;
  };
  /// Drops the first `count` symbols; shorter nonempty strings map to ε.
  struct Shave {
    std::size_t count = 1;
  };
  /// Deletes every neutral symbol.
  struct Shrink {
    SymbolSet neutral;
  };
  /// Inserts neutral symbols anywhere after the first position. Enumeration
  /// stops at `max_insertions` inserted symbols.
  struct Pump {
    SymbolSet neutral;
    std::size_t max_insertions = 2;
  };
  /// y0 d1…dm to y0 (d1⊕…⊕dm) for m ≥ 1.
  struct Integrator {
    MonoidVariator monoid;
  };
  /// y0 d1…dm to every y0 e1…en with n ≥ 1 and the same total. Enumeration
  /// stops at images of `max_image_length` symbols, by default the source
  /// length plus two.
  struct Disaggregator {
    MonoidVariator monoid;
    std::optional<std::size_t> max_image_length;
  };
  /// Applies the parts left to right.
  struct Compose {
    std::vector<RelationSpec> parts;
  };

  using Kind = std::variant<Identity, Delta, Shave, Shrink, Pump, Integrator, Disaggregator, Compose>;

  static RelationSpec identity();
  static RelationSpec delta(Variator variator);
  static RelationSpec shave(std::size_t count = 1);
  static RelationSpec shrink(SymbolSet neutral);
  static RelationSpec pump(SymbolSet neutral, std::size_t max_insertions = 2);
  static RelationSpec integrator(MonoidVariator monoid);
  static RelationSpec disaggregator(MonoidVariator monoid, std::optional<std::size_t> max_image_length = {});
  static RelationSpec compose(std::vector<RelationSpec> parts);

  const Kind& kind() const { return kind_; }

  /// True when enumeration of images is cut off by a bound somewhere inside.
  bool truncated() const;

  std::string describe() const;

 private:
  explicit RelationSpec(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

/// Every t with s related to t, subject to the enumeration bounds of Pump and
/// Disaggregator. Empty when s has no image.
std::set<Word> relation_image(const RelationSpec& spec, const Word& source);

/// Orders words by length, then lexicographically.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace eventify
