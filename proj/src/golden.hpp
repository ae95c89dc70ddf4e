#pragma once

#include <optional>
#include <string>

#include "regulators.hpp"
#include "sequence.hpp"
#include "systems.hpp"

namespace pireg {

// The worked two-flow scenario: packet-spacing regulation PS(5)/PS(10), a
// rate-1 server preempted on [0,3], [10,13], [20,23], and the reference
// values for D, E, E' and all worst-case delays.
namespace appendix {

PacketSequence input();    // A, L, F
FifoSystem server();
FlowOps operators();       // {1: ps 5, 2: ps 10}

const std::vector<Rat>& expected_d();
const std::vector<Rat>& expected_e();
const std::vector<Rat>& expected_e_bank();

}  // namespace appendix

// Recomputes the whole scenario and diffs it against the embedded reference
// values; the report lists every sequence and delay figure. corrupt_index
// (1-based, counting across D, E, E' in that order) flips one reference
// value first, as a negative control. ok is false on the first mismatch.
std::string example_report(std::optional<std::size_t> corrupt_index, bool& ok);

}  // namespace pireg
