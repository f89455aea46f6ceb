#pragma once

#include <cstddef>

#include "eventify/device.hpp"
#include "eventify/result.hpp"
#include "eventify/variator.hpp"

namespace eventify {

/// Builds a device that reads the first observation as is and every later
/// observation as a difference from its predecessor. Nondeterministic inputs
/// are first determinized without losing any output information.
///
/// Fails with UncoveredChange when two consecutive observations of some
/// string have no difference, and with OutputConflict when strings with a
/// common difference encoding have no output in common.
TransformResult delta_transform(const Device& f, const Variator& variator);

/// Like delta_transform, but the leading absolute observation is dropped,
/// so the result reads pure difference streams.
TransformResult shave_delta_transform(const Device& f, const Variator& variator);

/// Device that reads strings with every symbol of `neutral` deleted.
TransformResult shrink_transform(const Device& f, const SymbolSet& neutral);

/// Device that reads strings with symbols of `neutral` inserted anywhere
/// after the first position.
TransformResult pump_transform(const Device& f, const SymbolSet& neutral);

/// Number of (state, last observation) pairs reachable in f, counting the
/// initial state once.
std::size_t split_size(const Device& f);

}  // namespace eventify
