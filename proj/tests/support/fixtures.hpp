#pragma once

#include <string>
#include <vector>

#include "eventify/eventify.hpp"

namespace eventify::fixtures {

/// Wall sensor: reads 0 (white) or 1 (azure) and reports the last reading.
Device wall();
/// Two differences over {0,1}: "⊥" keeps the bit, "⊤" flips it.
Variator flip_variator();
/// The same flip structure as a two-element group acting on {0,1}.
MonoidVariator flip_monoid();

/// Two bits of state: outputs the parity of the number of changes seen.
Device parity();

/// v0 -a-> v1 -n-> v2 -b-> v3.
Device tiny();
/// tiny plus a second branch v0 -n-> u1 -a-> u2 -b-> u3.
Device small();
/// A candidate that tolerates polling but not change-triggered reading of
/// tiny.
Device tiny_candidate();
/// j0 -a-> j1 -n-> j2 (n-loop) -b-> j3: neither vertex nor output stable.
Device unstable_neutral();

/// Compass device over eight headings. With `quarter_turns` the heading may
/// also change by 90° in one step.
Device compass(bool quarter_turns);
/// "Ø", "+" and "-": stay, or turn 45° clockwise or anticlockwise.
Variator compass_variator();
/// Rotations r0..r7 acting on the eight headings.
MonoidVariator compass_rotations();
std::vector<std::string> headings();

/// Fire detector: once 1 is read the state stays abnormal.
Device fire_detector();
/// "☺" is the identity, "☹" absorbs everything; 0⊲☹ = 1.
MonoidVariator fire_monoid();

/// Lanes 0..2 numbered right to left; "left" adds one, clamped. The
/// left/null/right operator is not
/// associative.
MonoidVariator lane_monoid();

/// One-element monoid acting trivially on `observations`.
MonoidVariator trivial_monoid(const SymbolSet& observations);

/// Device whose first and second readings of "0" give disjoint outputs.
/// Any monoid fixes 0, so reading the identity after "0" cannot be both
/// stable and correct.
Device identity_conflict();
/// Two elements acting trivially on {0}.
MonoidVariator identity_conflict_monoid();

Graph triangle();
Graph complete4();

}  // namespace eventify::fixtures
