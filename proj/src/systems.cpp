#include "systems.hpp"

#include <algorithm>
#include <sstream>

#include "prng.hpp"

namespace pireg {

FifoSystem FifoSystem::identity() { return FifoSystem(); }

FifoSystem FifoSystem::damper(Rat d) {
  if (d.sign() < 0) throw system_error("damper needs d >= 0");
  FifoSystem s;
  s.kind_ = Kind::Damper;
  s.delay_ = std::move(d);
  return s;
}

FifoSystem FifoSystem::preemptive_server(Rat rate, std::vector<TimeWindow> windows) {
  if (rate.sign() <= 0) throw system_error("server needs rate > 0");
  std::sort(windows.begin(), windows.end(),
            [](const TimeWindow& a, const TimeWindow& b) { return a.begin < b.begin; });
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (windows[i].end < windows[i].begin) throw system_error("preemption window ends before it begins");
    if (i > 0 && windows[i].begin < windows[i - 1].end)
      throw system_error("overlapping preemption windows");
  }
  FifoSystem s;
  s.kind_ = Kind::PreemptiveServer;
  s.rate_ = std::move(rate);
  s.windows_ = std::move(windows);
  return s;
}

FifoSystem FifoSystem::bounded_jitter(std::uint64_t seed, Rat d_max) {
  if (d_max.sign() < 0) throw system_error("jitter needs d_max >= 0");
  FifoSystem s;
  s.kind_ = Kind::BoundedJitterRandom;
  s.seed_ = seed;
  s.delay_ = std::move(d_max);
  return s;
}

PacketSequence FifoSystem::apply(const PacketSequence& seq) const {
  switch (kind_) {
    case Kind::Identity:
      return seq;
    case Kind::Damper: {
      std::vector<Rat> out;
      out.reserve(seq.size());
      for (const Rat& a : seq.dates()) out.push_back(a + delay_);
      return seq.with_dates(std::move(out));
    }
    case Kind::PreemptiveServer: {
      std::vector<Rat> out;
      out.reserve(seq.size());
      Rat free_at(0);
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        if (seq.date(n).sign() < 0) throw system_error("server needs nonnegative dates");
        Rat t = Rat::max(free_at, seq.date(n));
        Rat work = Rat(static_cast<long>(seq.length(n))) / rate_;
        for (const TimeWindow& w : windows_) {
          if (w.end <= t) continue;
          if (w.begin <= t) {  // service suspended right now
            t = w.end;
            continue;
          }
          Rat room = w.begin - t;
          if (work <= room) break;  // finishes before the next suspension
          work -= room;
          t = w.end;
        }
        t += work;
        out.push_back(t);
        free_at = t;
      }
      return seq.with_dates(std::move(out));
    }
    case Kind::BoundedJitterRandom: {
      SplitMix64 rng(seed_);
      const long kGrid = 64;
      std::vector<Rat> out;
      out.reserve(seq.size());
      for (std::size_t n = 1; n <= seq.size(); ++n) {
        Rat delta = delay_ * Rat(static_cast<long>(rng.below(kGrid + 1)), kGrid);
        Rat d = seq.date(n) + delta;
        if (!out.empty()) d = Rat::max(d, out.back());
        out.push_back(d);
      }
      return seq.with_dates(std::move(out));
    }
  }
  throw system_error("unknown system kind");
}

std::string FifoSystem::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Identity: os << "identity"; break;
    case Kind::Damper: os << "damper " << delay_.str(); break;
    case Kind::PreemptiveServer:
      os << "pserver " << rate_.str();
      for (const auto& w : windows_) os << " [" << w.begin.str() << "," << w.end.str() << "]";
      break;
    case Kind::BoundedJitterRandom: os << "jitter " << seed_ << " " << delay_.str(); break;
  }
  return os.str();
}

namespace {

void check_matched(const PacketSequence& input, const std::vector<Rat>& output) {
  if (input.size() != output.size()) throw system_error("mismatched sequences");
  for (std::size_t i = 0; i < output.size(); ++i)
    if (output[i] < input.dates()[i]) throw system_error("output dates must dominate input dates");
}

}  // namespace

Rat worst_case_delay(const PacketSequence& input, const std::vector<Rat>& output_dates) {
  check_matched(input, output_dates);
  Rat best(0);
  for (std::size_t i = 0; i < output_dates.size(); ++i)
    best = Rat::max(best, output_dates[i] - input.dates()[i]);
  return best;
}

Rat worst_case_delay(const PacketSequence& input, const PacketSequence& output) {
  if (input.lengths() != output.lengths() || input.flows() != output.flows())
    throw system_error("mismatched sequences");
  return worst_case_delay(input, output.dates());
}

std::map<std::uint64_t, Rat> per_flow_worst_case_delay(const PacketSequence& input,
                                                       const std::vector<Rat>& output_dates) {
  check_matched(input, output_dates);
  std::map<std::uint64_t, Rat> out;
  for (std::uint64_t f : input.flow_ids()) out.emplace(f, Rat(0));
  for (std::size_t i = 0; i < output_dates.size(); ++i) {
    Rat& d = out[input.flows()[i]];
    d = Rat::max(d, output_dates[i] - input.dates()[i]);
  }
  return out;
}

std::map<std::uint64_t, Rat> per_flow_worst_case_delay(const PacketSequence& input,
                                                       const PacketSequence& output) {
  if (input.lengths() != output.lengths() || input.flows() != output.flows())
    throw system_error("mismatched sequences");
  return per_flow_worst_case_delay(input, output.dates());
}

}  // namespace pireg
