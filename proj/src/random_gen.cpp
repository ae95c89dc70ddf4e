#include "random_gen.hpp"

namespace pireg {

Rat random_gap(SplitMix64& rng) {
  static const long dens[] = {1, 2, 3, 4};
  return Rat(static_cast<long>(rng.below(7)), dens[rng.below(4)]);
}

Rat random_positive_rat(SplitMix64& rng) {
  static const long dens[] = {1, 2, 3, 4};
  return Rat(static_cast<long>(rng.below(6)) + 1, dens[rng.below(4)]);
}

PacketSequence random_trace(SplitMix64& rng, std::size_t max_packets, std::uint64_t max_flows) {
  std::size_t n = rng.below(max_packets + 1);
  std::vector<Rat> dates;
  std::vector<std::int64_t> lengths;
  std::vector<std::uint64_t> flows;
  Rat t(0);
  for (std::size_t i = 0; i < n; ++i) {
    t += random_gap(rng);
    dates.push_back(t);
    lengths.push_back(static_cast<std::int64_t>(rng.below(4)) + 1);
    flows.push_back(rng.below(max_flows) + 1);
  }
  return PacketSequence::make(std::move(dates), std::move(lengths), std::move(flows));
}

Curve random_sigma(SplitMix64& rng) {
  if (rng.coin()) return Curve::affine(random_positive_rat(rng), random_positive_rat(rng));
  return Curve::staircase(random_positive_rat(rng), random_positive_rat(rng));
}

Curve random_curve(SplitMix64& rng) {
  std::size_t pieces = rng.below(5) + 1;
  std::vector<CurveBreakpoint> bps;
  Rat x(0);
  ExtRat carry(Rat(static_cast<long>(rng.below(3))));  // f(0-) stand-in
  for (std::size_t i = 0; i < pieces; ++i) {
    CurveBreakpoint b;
    b.x = x;
    b.left = carry;
    b.value = rng.below(3) == 0 ? carry + Rat(static_cast<long>(rng.below(3))) : carry;
    b.right = rng.below(3) == 0 ? b.value + Rat(static_cast<long>(rng.below(3))) : b.value;
    b.slope = Rat(static_cast<long>(rng.below(3)), rng.coin() ? 1 : 2);
    Rat dx = random_positive_rat(rng);
    carry = b.right + b.slope * dx;
    x += dx;
    bps.push_back(b);
  }

  if (rng.below(5) == 0) {  // jump to +inf at the end
    CurveBreakpoint b;
    b.x = x;
    b.left = carry;
    b.value = rng.coin() ? carry : ExtRat::pos_inf();
    b.right = ExtRat::pos_inf();
    b.slope = Rat(0);
    bps.push_back(b);
    return Curve::from_breakpoints(std::move(bps));
  }

  if (rng.below(3) == 0) {  // eventually-periodic tail
    Curve base = Curve::from_breakpoints(bps);
    const Rat& start = bps[rng.below(bps.size())].x;
    Rat last_x = bps.back().x;
    Rat period = (last_x - start) + random_positive_rat(rng);
    Rat d_min = base.limit(start + period, Side::Left).finite() - base.eval(start).finite();
    Rat extra = rng.coin() ? Rat(0) : random_positive_rat(rng);
    if ((d_min + extra).is_zero()) extra = Rat(1);
    return Curve::from_breakpoints(std::move(bps), PeriodicTail{start, period, d_min + extra});
  }
  return Curve::from_breakpoints(std::move(bps));
}

Operator random_operator(SplitMix64& rng, int depth) {
  switch (rng.below(depth < 2 ? 9 : 8)) {
    case 0: return Operator::lrq(random_positive_rat(rng));
    case 1: return Operator::leaky_bucket(random_positive_rat(rng), random_positive_rat(rng));
    case 2:
      return Operator::staircase(random_positive_rat(rng), static_cast<std::int64_t>(rng.below(5)) + 1);
    case 3:
      return Operator::tsn_packet_rate(random_gap(rng), static_cast<std::int64_t>(rng.below(4)) + 1);
    case 4: return Operator::packet_spacing(random_gap(rng));
    case 5:
      return Operator::packet_burstiness(random_positive_rat(rng),
                                         static_cast<std::int64_t>(rng.below(4)) + 1);
    case 6: {
      // g with g(0) = 0 and an unbounded tail: an affine or staircase shape.
      if (rng.coin()) return Operator::g_regulation(Curve::affine(random_positive_rat(rng), Rat(0)));
      return Operator::g_regulation(Curve::staircase(random_positive_rat(rng), random_positive_rat(rng)));
    }
    case 7: return Operator::arrival_curve(random_sigma(rng));
    default:
      return Operator::max_of(random_operator(rng, depth + 1), random_operator(rng, depth + 1));
  }
}

FifoSystem random_system(SplitMix64& rng) {
  switch (rng.below(4)) {
    case 0: return FifoSystem::identity();
    case 1: return FifoSystem::damper(random_gap(rng));
    case 2: {
      std::vector<TimeWindow> windows;
      Rat t(0);
      std::size_t k = rng.below(4);
      for (std::size_t i = 0; i < k; ++i) {
        t += random_gap(rng);
        Rat w = random_gap(rng);
        windows.push_back({t, t + w});
        t += w + Rat(1, 4);  // keep windows disjoint
      }
      return FifoSystem::preemptive_server(random_positive_rat(rng), std::move(windows));
    }
    default: return FifoSystem::bounded_jitter(rng.next(), random_gap(rng));
  }
}

}  // namespace pireg
