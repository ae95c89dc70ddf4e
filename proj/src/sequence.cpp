#include "sequence.hpp"

#include <algorithm>

namespace pireg {

PacketSequence PacketSequence::make(std::vector<Rat> dates, std::vector<std::int64_t> lengths,
                                    std::vector<std::uint64_t> flows) {
  if (flows.empty()) flows.assign(dates.size(), 1);
  if (dates.size() != lengths.size() || dates.size() != flows.size())
    throw sequence_error("dates, lengths and flows must have equal length");
  for (std::size_t i = 0; i + 1 < dates.size(); ++i)
    if (dates[i + 1] < dates[i]) throw sequence_error("dates must be wide-sense increasing");
  for (std::int64_t l : lengths)
    if (l < 1) throw sequence_error("packet lengths must be positive integers");
  for (std::uint64_t f : flows)
    if (f < 1) throw sequence_error("flow ids must be positive integers");

  PacketSequence s;
  s.dates_ = std::move(dates);
  s.lengths_ = std::move(lengths);
  s.flows_ = std::move(flows);
  s.flow_index_.resize(s.dates_.size());
  for (std::size_t n = 1; n <= s.dates_.size(); ++n) {
    auto& pos = s.positions_[s.flows_[n - 1]];
    pos.push_back(n);
    s.flow_index_[n - 1] = pos.size();
  }
  return s;
}

std::size_t PacketSequence::flow_index(std::size_t n) const {
  if (n < 1 || n > size()) throw sequence_error("packet index out of range");
  return flow_index_[n - 1];
}

std::size_t PacketSequence::packet_of_flow(std::uint64_t f, std::size_t i) const {
  auto it = positions_.find(f);
  if (it == positions_.end()) throw sequence_error("flow not present in the sequence");
  if (i < 1 || i > it->second.size()) throw sequence_error("flow has fewer packets than requested");
  return it->second[i - 1];
}

std::vector<std::uint64_t> PacketSequence::flow_ids() const {
  std::vector<std::uint64_t> ids;
  ids.reserve(positions_.size());
  for (const auto& [f, pos] : positions_) ids.push_back(f);
  return ids;
}

FlowView PacketSequence::flow_view(std::uint64_t f) const {
  auto it = positions_.find(f);
  if (it == positions_.end()) throw sequence_error("flow not present in the sequence");
  FlowView v;
  v.flow = f;
  v.index_map = it->second;
  v.dates.reserve(v.index_map.size());
  v.lengths.reserve(v.index_map.size());
  for (std::size_t n : v.index_map) {
    v.dates.push_back(dates_[n - 1]);
    v.lengths.push_back(lengths_[n - 1]);
  }
  return v;
}

bool PacketSequence::is_single_flow() const { return positions_.size() <= 1; }

Curve PacketSequence::cumulative_arrivals() const {
  std::vector<std::pair<Rat, ExtRat>> jumps;
  mpz_class total = 0;
  for (std::size_t i = 0; i < dates_.size(); ++i) {
    if (dates_[i].sign() < 0) throw domain_error("cumulative arrivals need nonnegative dates");
    total += lengths_[i];
    if (i + 1 < dates_.size() && dates_[i + 1] == dates_[i]) continue;  // aggregate ties
    jumps.emplace_back(dates_[i], ExtRat(Rat(mpq_class(total))));
  }
  return Curve::left_continuous_steps(ExtRat(0), jumps);
}

Curve PacketSequence::arrival_time_function() const {
  return cumulative_arrivals().upper_pseudo_inverse();
}

PacketSequence PacketSequence::with_dates(std::vector<Rat> dates) const {
  if (dates.size() != size()) throw sequence_error("replacement dates must match the sequence length");
  return make(std::move(dates), lengths_, flows_);
}

}  // namespace pireg
