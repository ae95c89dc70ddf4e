#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "curve.hpp"
#include "rational.hpp"

namespace pireg {

class sequence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subsequence of one flow inside a packet sequence. index_map holds the
// 1-based positions of this flow's packets in the parent sequence, so
// index_map[i-1] = ind(f, i) and dates[i-1] = A^f_i.
struct FlowView {
  std::uint64_t flow = 0;
  std::vector<std::size_t> index_map;
  std::vector<Rat> dates;
  std::vector<std::int64_t> lengths;
};

// Finite prefix of a marked point process (A, L, F): chronologically numbered
// dates (ties allowed, input order authoritative), positive integer lengths,
// positive flow ids. Immutable after construction.
class PacketSequence {
 public:
  PacketSequence() = default;
  // flows may be empty: single-flow view, treated as all-1.
  static PacketSequence make(std::vector<Rat> dates, std::vector<std::int64_t> lengths,
                             std::vector<std::uint64_t> flows = {});

  std::size_t size() const { return dates_.size(); }
  bool empty() const { return dates_.empty(); }

  // 1-based accessors, matching packet numbering.
  const Rat& date(std::size_t n) const { return dates_.at(n - 1); }
  std::int64_t length(std::size_t n) const { return lengths_.at(n - 1); }
  std::uint64_t flow(std::size_t n) const { return flows_.at(n - 1); }

  const std::vector<Rat>& dates() const { return dates_; }
  const std::vector<std::int64_t>& lengths() const { return lengths_; }
  const std::vector<std::uint64_t>& flows() const { return flows_; }

  // I(n): index of packet n within its flow (1-based both ways).
  std::size_t flow_index(std::size_t n) const;
  // ind(f, i): position of the i-th packet of flow f; inverse of flow_index.
  std::size_t packet_of_flow(std::uint64_t f, std::size_t i) const;

  std::vector<std::uint64_t> flow_ids() const;
  FlowView flow_view(std::uint64_t f) const;
  bool is_single_flow() const;

  // R(t) = sum of L_n over A_n < t, as a left-continuous staircase.
  Curve cumulative_arrivals() const;
  // T = upper pseudo-inverse of R.
  Curve arrival_time_function() const;

  // Same lengths and flows, new dates.
  PacketSequence with_dates(std::vector<Rat> dates) const;

 private:
  std::vector<Rat> dates_;
  std::vector<std::int64_t> lengths_;
  std::vector<std::uint64_t> flows_;
  std::map<std::uint64_t, std::vector<std::size_t>> positions_;  // flow -> 1-based packet indices
  std::vector<std::size_t> flow_index_;                          // per packet, I(n)
};

}  // namespace pireg
