#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "eventify/device.hpp"
#include "eventify/ovm.hpp"
#include "eventify/relation.hpp"
#include "eventify/variator.hpp"

namespace eventify {

/// Malformed input. `where` is a JSON pointer such as "/transitions/2/to"
/// or a "line N" location for text formats.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& message)
      : std::runtime_error(where.empty() ? message : where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

inline constexpr std::string_view kDeviceSchema = "eventify.device/1";
inline constexpr std::string_view kVariatorSchema = "eventify.variator/1";
inline constexpr std::string_view kMonoidSchema = "eventify.monoid/1";

/// Devices are JSON objects with keys schema, states, initial, observations,
/// output_alphabet (optional on input), outputs and transitions.
Device parse_device(std::string_view text);
/// Canonical form: sorted keys, sorted lists, two-space indent.
std::string serialize_device(const Device& device);

/// Variators are JSON objects with keys schema, differences, triples and an
/// optional observations list used to check the triples.
struct VariatorDocument {
  Variator variator;
  std::optional<SymbolSet> observations;
};
VariatorDocument parse_variator(std::string_view text);
std::string serialize_variator(const Variator& variator, const std::optional<SymbolSet>& observations = {});

/// Monoids carry elements, identity, op (nested map), observations and
/// action (nested map). Parsing checks shape only; load_monoid also runs
/// validate_monoid and rejects any violation.
MonoidVariator parse_monoid(std::string_view text);
MonoidVariator load_monoid(std::string_view text);
std::string serialize_monoid(const MonoidVariator& monoid);

/// One edge "a b" or one isolated vertex "a" per line; '#' starts a comment.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& graph);

/// Relation grammar:
///   id | delta:FILE | shave:K | shrink:A,B | pump:A,B[@K]
///   | integrator:FILE | disaggregator:FILE[@K] | compose(SPEC;SPEC;...)
/// FILE arguments are read through `read_file`.
RelationSpec parse_relation(std::string_view text, const std::function<std::string(const std::string&)>& read_file);

/// Graphviz text with states in name order and output sets in node labels.
std::string export_dot(const Device& device);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace eventify
