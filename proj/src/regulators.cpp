#include "regulators.hpp"

namespace pireg {

namespace {

Rat finite_release(const ExtRat& candidate, const Rat& fallback) {
  if (candidate.is_neg_inf()) return fallback;
  if (candidate.is_pos_inf())
    throw regulator_error("packet can never satisfy its regulation constraint (release date +inf)");
  return Rat::max(candidate.finite(), fallback);
}

const Operator& op_for(const FlowOps& ops, std::uint64_t flow) {
  auto it = ops.find(flow);
  if (it == ops.end())
    throw regulator_error("no regulation operator bound to flow " + std::to_string(flow));
  return it->second;
}

}  // namespace

Rat PerFlowRegulator::push(const Rat& date, std::int64_t length) {
  lengths_.push_back(length);
  std::size_t n = lengths_.size();
  Rat floor = date;
  if (n > 1) floor = Rat::max(floor, out_dates_.back());
  ExtRat pi = op_.evaluate(std::span<const Rat>(out_dates_), std::span<const std::int64_t>(lengths_), n);
  Rat release = finite_release(pi, floor);
  out_dates_.push_back(release);
  return release;
}

Rat InterleavedRegulator::push(const Rat& date, std::int64_t length, std::uint64_t flow) {
  const Operator& op = op_for(ops_, flow);
  FlowState& fs = flows_[flow];
  fs.lengths.push_back(length);
  std::size_t i = fs.lengths.size();  // I(n)
  Rat floor = date;
  if (!out_dates_.empty()) floor = Rat::max(floor, out_dates_.back());
  ExtRat pi = op.evaluate(std::span<const Rat>(fs.out_dates), std::span<const std::int64_t>(fs.lengths), i);
  Rat release = finite_release(pi, floor);
  fs.out_dates.push_back(release);
  out_dates_.push_back(release);
  return release;
}

PacketSequence minimal_regulate(const Operator& op, const PacketSequence& seq) {
  if (!seq.is_single_flow()) throw regulator_error("per-flow regulator needs a single-flow sequence");
  PerFlowRegulator reg(op);
  std::vector<Rat> out;
  out.reserve(seq.size());
  for (std::size_t n = 1; n <= seq.size(); ++n) out.push_back(reg.push(seq.date(n), seq.length(n)));
  return seq.with_dates(std::move(out));
}

PacketSequence minimal_interleaved_regulate(const FlowOps& ops, const PacketSequence& seq) {
  InterleavedRegulator reg(ops);
  std::vector<Rat> out;
  out.reserve(seq.size());
  for (std::size_t n = 1; n <= seq.size(); ++n)
    out.push_back(reg.push(seq.date(n), seq.length(n), seq.flow(n)));
  return seq.with_dates(std::move(out));
}

std::vector<Rat> per_flow_bank(const FlowOps& ops, const PacketSequence& seq) {
  std::vector<Rat> out(seq.size(), Rat(0));
  for (std::uint64_t f : seq.flow_ids()) {
    const Operator& op = op_for(ops, f);
    FlowView view = seq.flow_view(f);
    PerFlowRegulator reg(op);
    for (std::size_t i = 0; i < view.dates.size(); ++i)
      out[view.index_map[i] - 1] = reg.push(view.dates[i], view.lengths[i]);
  }
  return out;
}

std::vector<Release> head_of_line_schedule(const FlowOps& ops, const PacketSequence& seq) {
  for (std::uint64_t f : seq.flow_ids()) op_for(ops, f);  // fail fast on a missing binding

  std::vector<Release> releases;
  releases.reserve(seq.size());

  struct FlowHist {
    std::vector<Rat> dates;
    std::vector<std::int64_t> lengths;
  };
  std::map<std::uint64_t, FlowHist> released;

  // Packets queue in FIFO order (numbering order). The clock jumps from
  // release to release; a packet is examined once, when it reaches the head
  // of the queue, and packets behind it wait unexamined.
  Rat clock(0);
  for (std::size_t head = 1; head <= seq.size(); ++head) {
    Rat at_front = seq.date(head);                       // arrival
    if (head > 1) at_front = Rat::max(at_front, clock);  // predecessor left the queue
    std::uint64_t f = seq.flow(head);
    FlowHist& h = released[f];
    h.lengths.push_back(seq.length(head));
    ExtRat pi = op_for(ops, f).evaluate(std::span<const Rat>(h.dates),
                                        std::span<const std::int64_t>(h.lengths), h.lengths.size());
    Rat eligible = at_front;
    if (!pi.is_neg_inf()) {
      if (pi.is_pos_inf())
        throw regulator_error("packet can never satisfy its regulation constraint (release date +inf)");
      eligible = Rat::max(eligible, pi.finite());
    }
    releases.push_back({eligible, head});
    h.dates.push_back(eligible);
    clock = eligible;
  }
  return releases;
}

}  // namespace pireg
