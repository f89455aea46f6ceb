#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "eventify/device.hpp"
#include "eventify/ovm.hpp"
#include "eventify/variator.hpp"

namespace eventify {

/// Seed from the EVENTIFY_SEED environment variable, or `fallback`.
std::uint64_t seed_from_environment(std::uint64_t fallback);

struct RandomDeviceOptions {
  std::size_t min_states = 1;
  std::size_t max_states = 5;
  std::size_t observations = 3;
  std::size_t outputs = 3;
  /// Chance that a given state has a move on a given observation.
  double move_probability = 0.6;
};

/// Deterministic device with states s0…, observations y0… and outputs c0….
Device random_device(std::mt19937_64& rng, const RandomDeviceOptions& options = {});

/// Functional variator over `observations` with differences d0…d(k-1),
/// 1 ≤ k ≤ max_differences. Each (observation, difference) pair gets a
/// target with probability `coverage`.
Variator random_functional_variator(std::mt19937_64& rng, const SymbolSet& observations, std::size_t max_differences,
                                    double coverage = 0.8);

/// Monoid of maps on `observations` generated by one or two random maps and
/// closed under composition, with at most `max_elements` elements. The
/// identity is "id" and the others are "g1", "g2", …; the action applies the
/// map.
MonoidVariator random_transformation_monoid(std::mt19937_64& rng, const SymbolSet& observations,
                                            std::size_t max_elements);

/// Erdős–Rényi graph on vertices "v1"… "vn".
Graph random_graph(std::mt19937_64& rng, std::size_t vertices, double edge_probability);

}  // namespace eventify
