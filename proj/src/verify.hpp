#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "curve.hpp"
#include "regulators.hpp"
#include "sequence.hpp"
#include "systems.hpp"

namespace pireg {

// Verdict of one theorem check. A failed check always carries a witness that
// re-verifies under direct evaluation of the violated relation; a failed
// precondition (e.g. an irregular input where the theorem assumes a regular
// one) is flagged as such and is not a theorem verdict.
struct CheckReport {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
  bool precondition_failure = false;
  std::string note;  // extra detail on pass (instance counts etc.)

  // "CHECK <name> PASS|FAIL [witness: ...]"
  std::string line() const;
};

enum class ShapingMode { PerFlow, Interleaved };

// The three formulations of an arrival-curve constraint — the min-plus
// oracle (1), the sigma^+ sum condition (2) and the sigma-lower-inverse gap
// condition (3) — must give one common verdict.
bool theorem1_cond2(const PacketSequence& seq, const Curve& sigma);
bool theorem1_cond3(const PacketSequence& seq, const Curve& sigma_lower);
CheckReport check_theorem1(const PacketSequence& seq, const Curve& sigma);

CheckReport check_regularity(const Operator& op, const PacketSequence& seq);

// Minimality: a valid regulator output dominates the minimal one.
CheckReport check_minimality(const Operator& op, const PacketSequence& input,
                             const PacketSequence& candidate);
CheckReport check_minimality(const FlowOps& ops, const PacketSequence& input,
                             const PacketSequence& candidate);

// Shaping-for-free: the minimal (interleaved) regulator placed after a FIFO
// system leaves the sup-delay unchanged. PerFlow mode checks every flow
// through a bank of per-flow regulators; Interleaved checks the overall sup.
CheckReport check_shaping_for_free(const FifoSystem& sys, const FlowOps& ops,
                                   const PacketSequence& input, ShapingMode mode);

// E >= E' elementwise (interleaved vs bank).
CheckReport check_dominance(const FlowOps& ops, const PacketSequence& input);

// Randomized campaigns backing the acceptance criteria; each returns a
// single aggregated report (first failure wins, with its witness).
CheckReport run_theorem1_campaign(std::uint64_t seed, std::size_t instances);
CheckReport run_shaping_campaign(std::uint64_t seed, std::size_t instances, ShapingMode mode);
CheckReport run_minimality_campaign(std::uint64_t seed, std::size_t instances);
CheckReport run_dominance_campaign(std::uint64_t seed, std::size_t instances);
CheckReport run_c_conditions_campaign(std::uint64_t seed, std::size_t instances_per_operator);
CheckReport run_lemma_campaign(std::uint64_t seed, std::size_t curves);

// Exhibits a trace satisfying the g-style condition
// sum_{j=m}^{n-1} L_j <= sigma(A_n - A_m) while violating the arrival curve
// constraint, by search over small traces.
CheckReport find_nonequivalence_witness();

}  // namespace pireg
