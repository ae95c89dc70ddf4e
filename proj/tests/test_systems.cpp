#include "doctest.h"
#include "golden.hpp"
#include "random_gen.hpp"
#include "regulators.hpp"
#include "systems.hpp"

using namespace pireg;

TEST_CASE("preemptive server reproduces the worked scenario") {
  PacketSequence d = appendix::server().apply(appendix::input());
  CHECK(d.dates() == appendix::expected_d());
}

TEST_CASE("damper shifts exactly") {
  PacketSequence a = PacketSequence::make({Rat(0), Rat(5)}, {1, 1});
  CHECK(FifoSystem::damper(Rat(0)).apply(a).dates() == a.dates());
  PacketSequence shifted = FifoSystem::damper(Rat(3)).apply(a);
  CHECK(shifted.date(1) == Rat(3));
  CHECK(shifted.date(2) == Rat(8));
}

TEST_CASE("damper keeps a regular flow regular") {
  SplitMix64 rng(59);
  for (int i = 0; i < 200; ++i) {
    Operator op = random_operator(rng);
    PacketSequence reg = minimal_regulate(op, random_trace(rng, 10, 1));
    PacketSequence damped = FifoSystem::damper(random_gap(rng)).apply(reg);
    CHECK(op.is_regular(damped));
  }
}

TEST_CASE("every system satisfies the FIFO contract") {
  SplitMix64 rng(61);
  for (int i = 0; i < 300; ++i) {
    FifoSystem sys = random_system(rng);
    PacketSequence a = random_trace(rng, 12, 3);
    PacketSequence d = sys.apply(a);
    REQUIRE(d.size() == a.size());
    CHECK(d.lengths() == a.lengths());
    CHECK(d.flows() == a.flows());
    for (std::size_t n = 1; n <= a.size(); ++n) {
      CHECK(d.date(n) >= a.date(n));
      if (n > 1) CHECK(d.date(n) >= d.date(n - 1));
    }
  }
}

TEST_CASE("jitter is deterministic per seed and bounded") {
  PacketSequence a = PacketSequence::make({Rat(0), Rat(1), Rat(5)}, {1, 1, 1});
  FifoSystem j = FifoSystem::bounded_jitter(99, Rat(2));
  PacketSequence d1 = j.apply(a);
  PacketSequence d2 = j.apply(a);
  CHECK(d1.dates() == d2.dates());
  // D_n = max over m <= n of (A_m + delta_m) <= A_n + d_max.
  CHECK(worst_case_delay(a, d1) <= Rat(2));
}

TEST_CASE("overlapping preemption windows are rejected") {
  CHECK_THROWS_AS(
      FifoSystem::preemptive_server(Rat(1), {{Rat(0), Rat(3)}, {Rat(2), Rat(4)}}),
      system_error);
  // Touching windows are fine.
  FifoSystem ok = FifoSystem::preemptive_server(Rat(1), {{Rat(0), Rat(2)}, {Rat(2), Rat(3)}});
  PacketSequence a = PacketSequence::make({Rat(0)}, {2});
  CHECK(ok.apply(a).date(1) == Rat(5));
}

TEST_CASE("fractional service rates are exact") {
  FifoSystem s = FifoSystem::preemptive_server(Rat(2, 3), {{Rat(1), Rat(2)}});
  PacketSequence a = PacketSequence::make({Rat(0)}, {2});
  // 2 units at rate 2/3 need 3 time units; 1 of the window interrupts.
  CHECK(s.apply(a).date(1) == Rat(4));
}

TEST_CASE("worst-case delay figures of the worked scenario") {
  PacketSequence a = appendix::input();
  PacketSequence d = appendix::server().apply(a);
  auto per_flow = per_flow_worst_case_delay(a, d);
  CHECK(per_flow.at(1) == Rat(5));
  CHECK(per_flow.at(2) == Rat(3));
  CHECK(worst_case_delay(a, d) == Rat(5));

  PacketSequence e = minimal_interleaved_regulate(appendix::operators(), d);
  auto tot = per_flow_worst_case_delay(a, e);
  CHECK(tot.at(1) == Rat(5));
  CHECK(tot.at(2) == Rat(5));
  CHECK(worst_case_delay(a, e) == Rat(5));

  CHECK(worst_case_delay(a, a) == Rat(0));
  CHECK_THROWS_AS(worst_case_delay(a, PacketSequence::make({Rat(0)}, {1})), system_error);
}
