#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eventify/device.hpp"
#include "eventify/relation.hpp"
#include "eventify/variator.hpp"
#include "eventify/verdict.hpp"

namespace eventify {

/// Checks that `candidate` output simulates `reference` modulo `spec`: every
/// source string has an image, and every image is accepted by the candidate
/// with outputs inside the source's outputs.
///
/// All sources up to `max_source_length` are enumerated first, so a failure
/// found there is the shortest one under shortlex order. If none is found
/// and the relation has no enumeration bounds, an exhaustive search over the
/// product of the two devices with the relation's transducer decides the
/// question outright and the result is Holds or Fails. Otherwise the result
/// is HoldsUpToBound.
Verdict check_output_simulation(const Device& candidate, const Device& reference, const RelationSpec& spec,
                                std::size_t max_source_length);

/// Exhaustive check under the untruncated meaning of every relation kind
/// (pump and disaggregator bounds are ignored). Returns Holds or Fails.
Verdict check_output_simulation_exact(const Device& candidate, const Device& reference, const RelationSpec& spec);

/// Holds when reading a neutral symbol never changes the state.
/// Throws InvalidModel for nondeterministic devices.
Verdict check_vertex_stable(const Device& f, const SymbolSet& neutral);

/// Holds when reading a neutral symbol never changes the output set and
/// lands on a single output. Throws InvalidModel for nondeterministic devices.
Verdict check_output_stable(const Device& f, const SymbolSet& neutral);

/// Why no device can output simulate a reference modulo a relation.
struct Obstruction {
  enum class Kind { NoImage, OutputConflict };

  Kind kind = Kind::OutputConflict;
  /// The image string shared by the conflicting sources (empty for NoImage).
  Word image;
  /// For NoImage, the single source without an image. For OutputConflict,
  /// sources related to `image` whose outputs intersect to ∅.
  std::vector<Word> sources;
  std::vector<SymbolSet> outputs;
};

struct OracleResult {
  bool exists = true;
  /// True when the search space was exhausted, making the answer exact.
  bool exhausted = false;
  std::optional<Obstruction> obstruction;
};

/// Decides whether some device output simulates `reference` modulo `spec`,
/// by exploring image strings up to `max_image_length` and source strings up
/// to the same length. Works from the relation's definition only.
OracleResult derivative_exists(const Device& reference, const RelationSpec& spec, std::size_t max_image_length);

/// derivative_exists for the difference relation of `variator`.
OracleResult brute_force_derivative_exists(const Device& f, const Variator& variator, std::size_t bound);

}  // namespace eventify
