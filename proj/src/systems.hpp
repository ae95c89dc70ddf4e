#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sequence.hpp"

namespace pireg {

class system_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeWindow {
  Rat begin;
  Rat end;  // begin <= end; service is suspended on [begin, end)
};

// FIFO system: maps (A, L, F) to (D, L, F) with A <= D, wide-sense
// increasing D, packet numbering preserved.
class FifoSystem {
 public:
  enum class Kind { Identity, Damper, PreemptiveServer, BoundedJitterRandom };

  static FifoSystem identity();
  // Releases packet n at exactly A_n + d.
  static FifoSystem damper(Rat d);
  // Work-conserving server at `rate` data units per time unit, suspended
  // during the (disjoint) preemption windows, packets served whole in FIFO
  // order; D_n is the completion time of packet n.
  static FifoSystem preemptive_server(Rat rate, std::vector<TimeWindow> windows);
  // Seeded per-packet delays in [0, d_max], monotonized forward:
  // D_n = max(D_{n-1}, A_n + delta_n).
  static FifoSystem bounded_jitter(std::uint64_t seed, Rat d_max);

  Kind kind() const { return kind_; }
  PacketSequence apply(const PacketSequence& seq) const;
  std::string str() const;

 private:
  FifoSystem() = default;

  Kind kind_ = Kind::Identity;
  Rat delay_;                       // damper d / jitter d_max
  Rat rate_;                        // server rate
  std::vector<TimeWindow> windows_;
  std::uint64_t seed_ = 0;
};

// sup over the prefix of D_n - A_n (0 for an empty prefix). The output may
// be non-monotone (per-flow bank); it must dominate the input elementwise.
Rat worst_case_delay(const PacketSequence& input, const std::vector<Rat>& output_dates);
Rat worst_case_delay(const PacketSequence& input, const PacketSequence& output);
std::map<std::uint64_t, Rat> per_flow_worst_case_delay(const PacketSequence& input,
                                                       const std::vector<Rat>& output_dates);
std::map<std::uint64_t, Rat> per_flow_worst_case_delay(const PacketSequence& input,
                                                       const PacketSequence& output);

}  // namespace pireg
