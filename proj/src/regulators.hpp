#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "operators.hpp"
#include "sequence.hpp"

namespace pireg {

class regulator_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using FlowOps = std::map<std::uint64_t, Operator>;

// Streaming minimal per-flow regulator:
//   D_1 = A_1,  D_n = max{ A_n, D_{n-1}, Pi(D, L)_n }.
// Each release date is final when emitted; causality guarantees the
// recursion never revises history. One instance, one logical driver.
class PerFlowRegulator {
 public:
  explicit PerFlowRegulator(Operator op) : op_(std::move(op)) {}

  Rat push(const Rat& date, std::int64_t length);

  const std::vector<Rat>& released() const { return out_dates_; }
  const std::vector<std::int64_t>& lengths() const { return lengths_; }

 private:
  Operator op_;
  std::vector<Rat> out_dates_;
  std::vector<std::int64_t> lengths_;
};

// Streaming minimal interleaved regulator:
//   D_1 = A_1,  D_n = max{ A_n, D_{n-1}, Pi^{F_n}(D^{F_n}, L^{F_n})_{I(n)} }.
class InterleavedRegulator {
 public:
  explicit InterleavedRegulator(FlowOps ops) : ops_(std::move(ops)) {}

  Rat push(const Rat& date, std::int64_t length, std::uint64_t flow);

  const std::vector<Rat>& released() const { return out_dates_; }

 private:
  struct FlowState {
    std::vector<Rat> out_dates;
    std::vector<std::int64_t> lengths;
  };
  FlowOps ops_;
  std::vector<Rat> out_dates_;
  std::map<std::uint64_t, FlowState> flows_;
};

// Whole-prefix forms of the two regulators.
PacketSequence minimal_regulate(const Operator& op, const PacketSequence& seq);
PacketSequence minimal_interleaved_regulate(const FlowOps& ops, const PacketSequence& seq);

// Bank of per-flow minimal regulators. Output dates keep the input packet
// numbering and are not necessarily wide-sense increasing, so they are
// returned as a plain vector rather than a PacketSequence.
std::vector<Rat> per_flow_bank(const FlowOps& ops, const PacketSequence& seq);

struct Release {
  Rat time;
  std::size_t packet;  // 1-based input index
};

// Event-driven head-of-line implementation of the interleaved regulator:
// packets queue in FIFO order and only the head is examined against its
// flow's constraint. Release times equal minimal_interleaved_regulate
// exactly.
std::vector<Release> head_of_line_schedule(const FlowOps& ops, const PacketSequence& seq);

}  // namespace pireg
