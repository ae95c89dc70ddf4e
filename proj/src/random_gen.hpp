#pragma once

#include "curve.hpp"
#include "operators.hpp"
#include "prng.hpp"
#include "sequence.hpp"
#include "systems.hpp"

namespace pireg {

// Randomized instances for the property campaigns. Dates are cumulative sums
// of small nonnegative rational gaps (zero gaps included, to exercise
// simultaneous arrivals); lengths and flow ids range over small integers.

Rat random_gap(SplitMix64& rng);
Rat random_positive_rat(SplitMix64& rng);

PacketSequence random_trace(SplitMix64& rng, std::size_t max_packets, std::uint64_t max_flows);

// Arrival curve for the equivalence campaign: affine(r, b) or
// staircase(tau, b) with randomized rational parameters.
Curve random_sigma(SplitMix64& rng);

// Arbitrary valid curve (jumps, plateaus, ramps, optional periodic tail or
// jump to +inf) for the pseudo-inverse lemma suite.
Curve random_curve(SplitMix64& rng);

// Catalog operator whose minimal regulator always releases in finite time.
Operator random_operator(SplitMix64& rng, int depth = 0);

FifoSystem random_system(SplitMix64& rng);

}  // namespace pireg
