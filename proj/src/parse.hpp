#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curve.hpp"
#include "operators.hpp"
#include "regulators.hpp"
#include "sequence.hpp"
#include "systems.hpp"

namespace pireg {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raw trace record: one packet per line, `<date> <length> [<flow>]`, `#`
// comments and blank lines ignored. Dates are rationals written p/q or as
// integers. Unlike PacketSequence, dates may be non-monotone: a per-flow
// bank stage legitimately emits such traces.
struct Trace {
  std::vector<Rat> dates;
  std::vector<std::int64_t> lengths;
  std::vector<std::uint64_t> flows;
};

Trace parse_trace(std::string_view text);
std::string format_trace(const Trace& trace);
Trace trace_of(const PacketSequence& seq);
PacketSequence sequence_of(const Trace& trace);  // validates the PacketSequence invariants

// Literal syntaxes:
//   curve:    affine r b | staircase tau b | points [(x, y_left, y, slope), ...]
//   operator: lrq r | lb r b | sc tau b | tsn tau K | ps tau | pb rho K |
//             lambda-nu lambda nu | g <curve> | ac <curve> | max(<op>, <op>)
//   system:   identity | damper d | pserver rate [s1,e1] [s2,e2] ... |
//             jitter seed dmax
Curve parse_curve(std::string_view text);
Operator parse_operator(std::string_view text);
FifoSystem parse_system(std::string_view text);

// Pipeline config: one stage per line. A system stage is written as its
// system literal; regulator stages as
//   regulator {flow: op, ...} | interleaved {flow: op, ...} | bank {flow: op, ...}
// `bank` may only be the final stage (its output is not FIFO).
struct PipelineStage {
  enum class Kind { System, PerFlowRegulator, Interleaved, Bank };
  Kind kind = Kind::System;
  FifoSystem system = FifoSystem::identity();
  FlowOps ops;
};

struct Pipeline {
  std::vector<PipelineStage> stages;
};

Pipeline parse_pipeline(std::string_view text);
Trace run_pipeline(const Pipeline& pipeline, const Trace& input);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace pireg
