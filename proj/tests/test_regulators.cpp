#include "doctest.h"
#include "golden.hpp"
#include "random_gen.hpp"
#include "regulators.hpp"
#include "verify.hpp"

using namespace pireg;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("minimal per-flow regulator on the worked flow-1 output") {
  // PS(5) applied to the flow-1 view of the FIFO output.
  PacketSequence d1 = PacketSequence::make(rats({5, 7, 15, 17, 25, 27}), {2, 2, 2, 2, 2, 2});
  PacketSequence e1 = minimal_regulate(Operator::packet_spacing(Rat(5)), d1);
  CHECK(e1.dates() == rats({5, 10, 15, 20, 25, 30}));
}

TEST_CASE("minimal regulator is the identity on regular inputs") {
  SplitMix64 rng(41);
  for (int i = 0; i < 200; ++i) {
    Operator op = random_operator(rng);
    PacketSequence reg = minimal_regulate(op, random_trace(rng, 10, 1));
    CHECK(op.is_regular(reg));
    CHECK(minimal_regulate(op, reg).dates() == reg.dates());
  }
}

TEST_CASE("LRQ regulator recursion") {
  PacketSequence seq = PacketSequence::make(rats({0, 0, 0}), {2, 2, 2});
  PacketSequence out = minimal_regulate(Operator::lrq(Rat(1)), seq);
  CHECK(out.dates() == rats({0, 2, 4}));
}

TEST_CASE("interleaved regulator on the worked scenario") {
  PacketSequence d = appendix::server().apply(appendix::input());
  CHECK(d.dates() == appendix::expected_d());

  PacketSequence e = minimal_interleaved_regulate(appendix::operators(), d);
  CHECK(e.dates() == appendix::expected_e());

  std::vector<Rat> bank = per_flow_bank(appendix::operators(), d);
  CHECK(bank == appendix::expected_e_bank());
  // Flow-2 packets are undelayed by the bank.
  for (std::size_t n : {3u, 6u, 9u}) CHECK(bank[n - 1] == d.date(n));
}

TEST_CASE("interleaved regulator is the identity on all-regular input") {
  SplitMix64 rng(43);
  for (int i = 0; i < 200; ++i) {
    FlowOps ops;
    PacketSequence raw = random_trace(rng, 10, 3);
    for (std::uint64_t f : raw.flow_ids()) ops.emplace(f, random_operator(rng));
    PacketSequence reg = minimal_interleaved_regulate(ops, raw);
    CHECK(minimal_interleaved_regulate(ops, reg).dates() == reg.dates());
    for (std::uint64_t f : reg.flow_ids()) {
      FlowView v = reg.flow_view(f);
      CHECK(ops.at(f).is_regular(PacketSequence::make(v.dates, v.lengths)));
    }
  }
}

TEST_CASE("single-flow interleaved regulation collapses to per-flow") {
  SplitMix64 rng(47);
  for (int i = 0; i < 100; ++i) {
    Operator op = random_operator(rng);
    PacketSequence seq = random_trace(rng, 10, 1);
    FlowOps ops{{1, op}};
    CHECK(minimal_interleaved_regulate(ops, seq).dates() == minimal_regulate(op, seq).dates());
    CHECK(per_flow_bank(ops, seq) == minimal_regulate(op, seq).dates());
  }
}

TEST_CASE("missing flow binding is an error") {
  PacketSequence seq = PacketSequence::make({Rat(0)}, {1}, {2});
  FlowOps ops{{1, Operator::packet_spacing(Rat(1))}};
  CHECK_THROWS_AS(minimal_interleaved_regulate(ops, seq), regulator_error);
  CHECK_THROWS_AS(per_flow_bank(ops, seq), regulator_error);
  CHECK_THROWS_AS(head_of_line_schedule(ops, seq), regulator_error);
}

TEST_CASE("head-of-line schedule matches the recursion and shows blocking") {
  FlowOps ops = appendix::operators();
  PacketSequence d = appendix::server().apply(appendix::input());
  std::vector<Release> rel = head_of_line_schedule(ops, d);
  REQUIRE(rel.size() == d.size());
  for (std::size_t n = 0; n < rel.size(); ++n) {
    CHECK(rel[n].packet == n + 1);
    CHECK(rel[n].time == appendix::expected_e()[n]);
  }
  // Flow-2 packet 3 arrives at 8 but waits behind flow-1 packet 2 until 10.
  CHECK(d.date(3) == Rat(8));
  CHECK(rel[2].time == Rat(10));

  CHECK(head_of_line_schedule(ops, PacketSequence::make({}, {}, {})).empty());
  std::vector<Release> one =
      head_of_line_schedule(ops, PacketSequence::make({Rat(4)}, {1}, {1}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].time == Rat(4));
}

TEST_CASE("bank output can be non-monotone while the interleaved output dominates") {
  PacketSequence d = appendix::server().apply(appendix::input());
  std::vector<Rat> bank = per_flow_bank(appendix::operators(), d);
  CHECK(bank[2] < bank[1]);  // 8 after 10: not wide-sense increasing
  CheckReport dom = check_dominance(appendix::operators(), d);
  CHECK(dom.pass);
  CHECK(dom.note == "strict at 3 of 9 packets");
}

TEST_CASE("leaky-bucket shaper equals the expanded max-plus recursion") {
  SplitMix64 rng(53);
  for (int i = 0; i < 150; ++i) {
    Rat r = random_positive_rat(rng), b = random_positive_rat(rng);
    PacketSequence seq = random_trace(rng, 10, 1);
    PacketSequence shaped = minimal_regulate(Operator::arrival_curve(Curve::affine(r, b)), seq);

    // D_n = A_n v D_{n-1} v max_m ( D_m + (sum_{j=m}^{n} L_j - b)/r ).
    std::vector<Rat> d;
    for (std::size_t n = 1; n <= seq.size(); ++n) {
      Rat best = seq.date(n);
      if (n > 1) best = Rat::max(best, d[n - 2]);
      mpz_class sum = seq.length(n);
      for (std::size_t m = n; m-- > 1;) {
        sum += seq.length(m);
        best = Rat::max(best, d[m - 1] + (Rat(mpq_class(sum)) - b) / r);
      }
      d.push_back(best);
    }
    CHECK(shaped.dates() == d);
  }
}

TEST_CASE("streaming regulators emit final dates incrementally") {
  PerFlowRegulator reg(Operator::packet_spacing(Rat(5)));
  CHECK(reg.push(Rat(5), 2) == Rat(5));
  CHECK(reg.push(Rat(7), 2) == Rat(10));
  CHECK(reg.push(Rat(15), 2) == Rat(15));

  InterleavedRegulator inter(appendix::operators());
  PacketSequence d = appendix::server().apply(appendix::input());
  for (std::size_t n = 1; n <= d.size(); ++n)
    CHECK(inter.push(d.date(n), d.length(n), d.flow(n)) == appendix::expected_e()[n - 1]);
}
