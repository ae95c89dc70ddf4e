#include "doctest.h"
#include "golden.hpp"
#include "parse.hpp"
#include "random_gen.hpp"

using namespace pireg;

TEST_CASE("trace parsing and canonical round trip") {
  Trace t = parse_trace("# comment\n0 2 1\n\n5/2 1 2  # inline comment\n7 3\n");
  REQUIRE(t.dates.size() == 3);
  CHECK(t.dates[1] == Rat(5, 2));
  CHECK(t.flows[2] == 1);  // omitted flow defaults to 1
  CHECK(format_trace(t) == "0 2 1\n5/2 1 2\n7 3 1\n");
  CHECK(format_trace(parse_trace(format_trace(t))) == format_trace(t));

  CHECK_THROWS_AS(parse_trace("0 2 1 9 9\n"), parse_error);
  CHECK_THROWS_AS(parse_trace("x 2 1\n"), parse_error);
  CHECK_THROWS_AS(parse_trace("0 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_trace("0 1.5 1\n"), parse_error);
  // Dates may be non-monotone in a raw trace (bank output), but not in a
  // packet sequence.
  Trace bank = parse_trace("5 1 1\n3 1 2\n");
  CHECK_THROWS_AS(sequence_of(bank), parse_error);
}

TEST_CASE("random traces round-trip through the canonical form") {
  SplitMix64 rng(71);
  for (int i = 0; i < 300; ++i) {
    Trace t = trace_of(random_trace(rng, 12, 4));
    std::string text = format_trace(t);
    Trace back = parse_trace(text);
    CHECK(back.dates == t.dates);
    CHECK(back.lengths == t.lengths);
    CHECK(back.flows == t.flows);
    CHECK(format_trace(back) == text);
  }
}

TEST_CASE("curve literals") {
  CHECK(parse_curve("affine 1 2") == Curve::affine(Rat(1), Rat(2)));
  CHECK(parse_curve("staircase 10 3") == Curve::staircase(Rat(10), Rat(3)));
  Curve pts = parse_curve("points [(0, 0, 0, 1), (4, 4, 4, 0)]");
  CHECK(pts.eval(Rat(2)) == ExtRat(2));
  CHECK(pts.eval(Rat(9)) == ExtRat(4));
  CHECK(parse_curve("points [(0, 0, 0, 0), (1, 0, inf, 0)]").eval(Rat(2)).is_pos_inf());
  CHECK_THROWS_AS(parse_curve("affine 1"), parse_error);
  CHECK_THROWS_AS(parse_curve("staircase 0 3"), parse_error);
  CHECK_THROWS_AS(parse_curve("points []"), parse_error);
  CHECK_THROWS_AS(parse_curve("parabola 1"), parse_error);
}

TEST_CASE("operator literals") {
  CHECK(parse_operator("lrq 3/2").str() == "lrq 3/2");
  CHECK(parse_operator("lb 1 2").str() == "lb 1 2");
  CHECK(parse_operator("sc 10 3").str() == "sc 10 3");
  CHECK(parse_operator("tsn 6 2").str() == "tsn 6 2");
  CHECK(parse_operator("ps 5").str() == "ps 5");
  CHECK(parse_operator("pb 2 3").str() == "pb 2 3");
  CHECK(parse_operator("lambda-nu 2 3").str() == "pb 2 4");
  CHECK(parse_operator("g affine 1 0").str() == "g points [(0, 0, 0, 1)]");
  CHECK(parse_operator("max(ps 5, lb 1 2)").str() == "max(ps 5, lb 1 2)");
  CHECK(parse_operator("ac staircase 10 3").kind() == Operator::Kind::ArrivalCurve);
  CHECK_THROWS_AS(parse_operator("sc 10 1/2"), parse_error);
  CHECK_THROWS_AS(parse_operator("lrq 0"), parse_error);
  CHECK_THROWS_AS(parse_operator("warp 9"), parse_error);
}

TEST_CASE("system literals") {
  CHECK(parse_system("identity").kind() == FifoSystem::Kind::Identity);
  CHECK(parse_system("damper 3").kind() == FifoSystem::Kind::Damper);
  FifoSystem ps = parse_system("pserver 1 [0,3] [10,13] [20,23]");
  CHECK(ps.str() == "pserver 1 [0,3] [10,13] [20,23]");
  CHECK(parse_system("jitter 42 5").kind() == FifoSystem::Kind::BoundedJitterRandom);
  CHECK_THROWS_AS(parse_system("pserver 1 [3,0]"), parse_error);
  CHECK_THROWS_AS(parse_system("conveyor"), parse_error);
}

TEST_CASE("pipeline config runs the worked scenario") {
  Pipeline p = parse_pipeline(
      "# the worked scenario\n"
      "pserver 1 [0,3] [10,13] [20,23]\n"
      "interleaved {1: ps 5, 2: ps 10}\n");
  Trace out = run_pipeline(p, trace_of(appendix::input()));
  CHECK(out.dates == appendix::expected_e());

  Pipeline bank = parse_pipeline("pserver 1 [0,3] [10,13] [20,23]\nbank {1: ps 5, 2: ps 10}\n");
  CHECK(run_pipeline(bank, trace_of(appendix::input())).dates == appendix::expected_e_bank());

  Pipeline id = parse_pipeline("identity\n");
  Trace same = run_pipeline(id, trace_of(appendix::input()));
  CHECK(same.dates == appendix::input().dates());

  CHECK(run_pipeline(id, Trace{}).dates.empty());
}

TEST_CASE("pipeline config errors") {
  CHECK_THROWS_AS(parse_pipeline(""), parse_error);
  CHECK_THROWS_AS(parse_pipeline("interleaved {}\n"), parse_error);
  CHECK_THROWS_AS(parse_pipeline("interleaved {1: ps 5, 1: ps 6}\n"), parse_error);
  // bank before another stage is a semantic config error
  CHECK_THROWS_AS(parse_pipeline("bank {1: ps 5}\nidentity\n"), config_error);
  // missing flow binding surfaces as a config error at run time
  Pipeline p = parse_pipeline("interleaved {1: ps 5}\n");
  CHECK_THROWS_AS(run_pipeline(p, trace_of(appendix::input())), config_error);
  // per-flow regulator stage demands a single-flow trace
  Pipeline pf = parse_pipeline("regulator {1: ps 5}\n");
  CHECK_THROWS_AS(run_pipeline(pf, trace_of(appendix::input())), config_error);
  Trace single = parse_trace("5 2\n7 2\n15 2\n");
  CHECK(run_pipeline(pf, single).dates == std::vector<Rat>{Rat(5), Rat(10), Rat(15)});
}

TEST_CASE("pipeline splitting at an intermediate trace is associative") {
  Pipeline whole = parse_pipeline("pserver 1 [0,3] [10,13] [20,23]\ninterleaved {1: ps 5, 2: ps 10}\n");
  Pipeline first = parse_pipeline("pserver 1 [0,3] [10,13] [20,23]\n");
  Pipeline second = parse_pipeline("interleaved {1: ps 5, 2: ps 10}\n");
  Trace in = trace_of(appendix::input());
  Trace direct = run_pipeline(whole, in);
  Trace staged = run_pipeline(second, parse_trace(format_trace(run_pipeline(first, in))));
  CHECK(format_trace(direct) == format_trace(staged));
}
