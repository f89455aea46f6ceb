#include "eventify/relation.hpp"

#include <functional>
#include <stdexcept>

namespace eventify {

RelationSpec RelationSpec::identity() { return RelationSpec(Identity{}); }

RelationSpec RelationSpec::delta(Variator variator) { return RelationSpec(Delta{std::move(variator)}); }

RelationSpec RelationSpec::shave(std::size_t count) {
  if (count == 0) throw std::invalid_argument("shave count must be positive");
  return RelationSpec(Shave{count});
}

RelationSpec RelationSpec::shrink(SymbolSet neutral) { return RelationSpec(Shrink{std::move(neutral)}); }

RelationSpec RelationSpec::pump(SymbolSet neutral, std::size_t max_insertions) {
  if (max_insertions == 0) throw std::invalid_argument("pump insertion bound must be positive");
  return RelationSpec(Pump{std::move(neutral), max_insertions});
}

RelationSpec RelationSpec::integrator(MonoidVariator monoid) { return RelationSpec(Integrator{std::move(monoid)}); }

RelationSpec RelationSpec::disaggregator(MonoidVariator monoid, std::optional<std::size_t> max_image_length) {
  if (max_image_length && *max_image_length == 0) throw std::invalid_argument("image length bound must be positive");
  return RelationSpec(Disaggregator{std::move(monoid), max_image_length});
}

RelationSpec RelationSpec::compose(std::vector<RelationSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("a composition needs at least one part");
  return RelationSpec(Compose{std::move(parts)});
}

bool RelationSpec::truncated() const {
  if (std::holds_alternative<Pump>(kind_) || std::holds_alternative<Disaggregator>(kind_)) return true;
  if (const auto* chain = std::get_if<Compose>(&kind_)) {
    for (const auto& part : chain->parts) {
      if (part.truncated()) return true;
    }
  }
  return false;
}

std::string RelationSpec::describe() const {
  struct Describer {
    std::string operator()(const Identity&) const { return "id"; }
    std::string operator()(const Delta& r) const { return "delta" + format_set(r.variator.differences); }
    std::string operator()(const Shave& r) const { return "shave:" + std::to_string(r.count); }
    std::string operator()(const Shrink& r) const { return "shrink" + format_set(r.neutral); }
    std::string operator()(const Pump& r) const {
      return "pump" + format_set(r.neutral) + "@" + std::to_string(r.max_insertions);
    }
    std::string operator()(const Integrator& r) const { return "integrator<" + r.monoid.identity + ">"; }
    std::string operator()(const Disaggregator& r) const { return "disaggregator<" + r.monoid.identity + ">"; }
    std::string operator()(const Compose& r) const {
      std::string out = "compose(";
      for (std::size_t i = 0; i < r.parts.size(); ++i) out += (i ? ";" : "") + r.parts[i].describe();
      return out + ")";
    }
  };
  return std::visit(Describer{}, kind_);
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

std::set<Word> delta_image(const Variator& variator, const Word& s) {
  if (s.size() <= 1) return {s};
  std::set<Word> out{{s.front()}};
  for (std::size_t k = 1; k < s.size(); ++k) {
    SymbolSet covering = variator.differences_between(s[k - 1], s[k]);
    if (covering.empty()) return {};
    std::set<Word> next;
    for (const auto& prefix : out) {
      for (const auto& difference : covering) {
        Word extended = prefix;
        extended.push_back(difference);
        next.insert(std::move(extended));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::set<Word> pump_image(const RelationSpec::Pump& pump, const Word& s) {
  if (s.empty()) return {s};
  std::set<Word> out;
  Word current{s.front()};
  // `current` ends with s[index]; either insert a neutral symbol here or
  // move on to the next source symbol.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t index, std::size_t budget) {
    if (index + 1 == s.size()) {
      out.insert(current);
    } else {
      current.push_back(s[index + 1]);
      extend(index + 1, budget);
      current.pop_back();
    }
    if (budget == 0) return;
    for (const auto& symbol : pump.neutral) {
      current.push_back(symbol);
      extend(index, budget - 1);
      current.pop_back();
    }
  };
  extend(0, pump.max_insertions);
  return out;
}

std::set<Word> integrator_image(const MonoidVariator& monoid, const Word& s) {
  if (s.size() <= 1) return {s};
  Word tail(s.begin() + 1, s.end());
  for (const auto& d : tail) {
    if (!monoid.contains(d)) return {};
  }
  return {{s.front(), monoid.total(tail)}};
}

std::set<Word> disaggregator_image(const RelationSpec::Disaggregator& spec, const Word& s) {
  if (s.size() <= 1) return {s};
  const auto& monoid = spec.monoid;
  Word tail(s.begin() + 1, s.end());
  for (const auto& d : tail) {
    if (!monoid.contains(d)) return {};
  }
  Symbol target = monoid.total(tail);
  std::size_t max_length = spec.max_image_length.value_or(s.size() + 2);
  if (max_length < 2) return {};
  std::size_t max_differences = max_length - 1;

  // can_finish[j] holds the totals from which some string of at most j more
  // differences reaches the target.
  std::vector<SymbolSet> can_finish{{target}};
  for (std::size_t j = 1; j <= max_differences; ++j) {
    SymbolSet next = can_finish.back();
    for (const auto& a : monoid.elements) {
      for (const auto& d : monoid.elements) {
        if (can_finish.back().contains(monoid.combine(a, d))) next.insert(a);
      }
    }
    can_finish.push_back(std::move(next));
  }

  std::set<Word> out;
  Word current{s.front()};
  std::function<void(const Symbol&)> extend = [&](const Symbol& total) {
    std::size_t used = current.size() - 1;
    if (used >= 1 && total == target) out.insert(current);
    if (used == max_differences) return;
    for (const auto& d : monoid.elements) {
      Symbol next = monoid.combine(total, d);
      if (!can_finish[max_differences - used - 1].contains(next)) continue;
      current.push_back(d);
      extend(next);
      current.pop_back();
    }
  };
  extend(monoid.identity);
  return out;
}

}  // namespace

std::set<Word> relation_image(const RelationSpec& spec, const Word& s) {
  using R = RelationSpec;
  return std::visit(
      [&](const auto& kind) -> std::set<Word> {
        using K = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<K, R::Identity>) {
          return {s};
        } else if constexpr (std::is_same_v<K, R::Delta>) {
          return delta_image(kind.variator, s);
        } else if constexpr (std::is_same_v<K, R::Shave>) {
          if (s.size() <= kind.count) return {Word{}};
          return {Word(s.begin() + static_cast<std::ptrdiff_t>(kind.count), s.end())};
        } else if constexpr (std::is_same_v<K, R::Shrink>) {
          Word out;
          for (const auto& symbol : s) {
            if (!kind.neutral.contains(symbol)) out.push_back(symbol);
          }
          return {out};
        } else if constexpr (std::is_same_v<K, R::Pump>) {
          return pump_image(kind, s);
        } else if constexpr (std::is_same_v<K, R::Integrator>) {
          return integrator_image(kind.monoid, s);
        } else if constexpr (std::is_same_v<K, R::Disaggregator>) {
          return disaggregator_image(kind, s);
        } else {
          std::set<Word> current{s};
          for (const auto& part : kind.parts) {
            std::set<Word> next;
            for (const auto& middle : current) next.merge(relation_image(part, middle));
            current = std::move(next);
          }
          return current;
        }
      },
      spec.kind());
}

}  // namespace eventify
