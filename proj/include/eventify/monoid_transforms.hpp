#pragma once

#include "eventify/device.hpp"
#include "eventify/result.hpp"
#include "eventify/variator.hpp"

namespace eventify {

/// Device reading a first observation followed by a single accumulated
/// difference. The result is a three-layer tree: the root "ε", one state per
/// first observation y, and one state "y·D" per reachable total D. Fails
/// when the inner difference transform fails or when strings sharing a first
/// observation and a total have no output in common.
TransformResult monoid_integrator(const Device& f, const MonoidVariator& monoid);

/// Expands an integrator tree so that any difference string with the right
/// total is accepted: under each first observation hangs a copy of the
/// monoid's Cayley graph. Block states the integrator never reached accept
/// every output.
Device disaggregator(const Device& integrator, const MonoidVariator& monoid);

/// Integrator, disaggregator, then the identity-reading state of every block
/// absorbs its first-layer parent so that reading the identity never moves,
/// then every output set is cut to its smallest member.
///
/// Fails when the integrator fails, or when some first observation's outputs
/// share nothing with the outputs after an identity total. In the second case
/// no device can read both strings consistently. Throws InvalidModel when the
/// identity is itself an observation of f.
TransformResult eventify_pipeline(const Device& f, const MonoidVariator& monoid);

}  // namespace eventify
