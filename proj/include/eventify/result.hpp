#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eventify/device.hpp"

namespace eventify {

/// Why a transform could not produce a device.
struct NoSolution {
  enum class Reason { UncoveredChange, OutputConflict };

  Reason reason = Reason::OutputConflict;
  std::string message;
  /// For UncoveredChange: the consecutive observations with no difference.
  std::optional<std::pair<Symbol, Symbol>> uncovered_pair;
  /// A string leading to the obstruction. For UncoveredChange it is a source
  /// string ending in the uncovered pair; for OutputConflict it is a string
  /// over the result's alphabet reaching the conflicting merge.
  Word witness;
  /// For OutputConflict: the input-side states merged into one result state
  /// and their output sets, in matching order.
  std::vector<std::string> conflict_states;
  std::vector<SymbolSet> conflict_outputs;
};

std::string to_string(NoSolution::Reason reason);

/// Maps each result state to the input states it was built from.
using Provenance = std::map<std::string, std::set<std::string>>;

class TransformResult {
 public:
  TransformResult(Device device, Provenance provenance = {})
      : outcome_(std::move(device)), provenance_(std::move(provenance)) {}
  TransformResult(NoSolution failure) : outcome_(std::move(failure)) {}

  bool ok() const { return std::holds_alternative<Device>(outcome_); }
  explicit operator bool() const { return ok(); }

  /// Throws std::bad_variant_access when the transform failed.
  const Device& device() const { return std::get<Device>(outcome_); }
  const NoSolution& failure() const { return std::get<NoSolution>(outcome_); }
  const Provenance& provenance() const { return provenance_; }

 private:
  std::variant<Device, NoSolution> outcome_;
  Provenance provenance_;
};

enum class OutputMerge { Intersection, Union };

/// Subset construction. Merged states get the intersection of their members'
/// outputs and the construction fails on an empty one; OutputMerge::Union
/// keeps the language and the outputs of every string exactly and never
/// fails.
TransformResult determinize(const Device& device, OutputMerge merge = OutputMerge::Intersection);

}  // namespace eventify
