#include "curve.hpp"
#include "doctest.h"

using namespace pireg;

namespace {

ExtRat ev(const Curve& c, long num, long den = 1) { return c.eval(Rat(num, den)); }

}  // namespace

TEST_CASE("leaky-bucket curve evaluation") {
  Curve sigma = Curve::affine(Rat(1), Rat(2));  // sigma(t) = t + 2 for t > 0, sigma(0) = 0
  CHECK(ev(sigma, 0) == ExtRat(0));
  CHECK(ev(sigma, 3) == ExtRat(5));
  CHECK(sigma.limit(Rat(0), Side::Right) == ExtRat(2));
  CHECK_THROWS_AS(sigma.eval(Rat(-1)), domain_error);
  CHECK_THROWS_AS(sigma.limit(Rat(0), Side::Left), domain_error);
}

TEST_CASE("staircase curve evaluation and limits") {
  Curve sc = Curve::staircase(Rat(10), Rat(3));  // b * ceil(t / tau)
  CHECK(ev(sc, 10) == ExtRat(3));
  CHECK(sc.eval(Rat(1001, 100)) == ExtRat(6));  // 10 + 1/100
  CHECK(sc.limit(Rat(10), Side::Right) == ExtRat(6));  // b * floor(t/tau + 1)
  CHECK(sc.limit(Rat(10), Side::Left) == ExtRat(3));
  CHECK(ev(sc, 0) == ExtRat(0));
  CHECK(ev(sc, 25) == ExtRat(9));
  CHECK(ev(sc, 30) == ExtRat(9));
  CHECK(sc.limit(Rat(30), Side::Right) == ExtRat(12));
}

TEST_CASE("continuous curves have equal value and one-sided limits") {
  Curve line = Curve::identity();
  for (long t : {1, 2, 7}) {
    CHECK(line.eval(Rat(t)) == line.limit(Rat(t), Side::Left));
    CHECK(line.eval(Rat(t)) == line.limit(Rat(t), Side::Right));
  }
}

TEST_CASE("lower pseudo-inverse closed forms") {
  Curve sigma = Curve::affine(Rat(1), Rat(2));
  Curve down = sigma.lower_pseudo_inverse();
  CHECK(ev(down, 5) == ExtRat(3));          // max(0, (x-2)/1)
  CHECK(ev(down, 0) == ExtRat(0));
  CHECK(ev(down, 2) == ExtRat(0));
  CHECK(ev(down, 1) == ExtRat(0));

  Curve sc_down = Curve::staircase(Rat(10), Rat(3)).lower_pseudo_inverse();
  CHECK(ev(sc_down, 7) == ExtRat(20));      // tau * ceil(x/b - 1)
  CHECK(ev(sc_down, 0) == ExtRat(0));
  CHECK(ev(sc_down, 3) == ExtRat(0));
  CHECK(sc_down.eval(Rat(31, 10)) == ExtRat(10));

  Curve id = Curve::identity();
  CHECK(id.lower_pseudo_inverse() == id);
}

TEST_CASE("upper pseudo-inverse closed forms") {
  Curve id = Curve::identity();
  CHECK(id.upper_pseudo_inverse() == id);

  Curve sigma = Curve::affine(Rat(1), Rat(2));
  CHECK(sigma.upper_pseudo_inverse().eval(Rat(1)) == ExtRat(0));

  Curve sc = Curve::staircase(Rat(10), Rat(3));
  CHECK(sc.upper_pseudo_inverse().eval(Rat(3)) == ExtRat(10));
  CHECK(sc.upper_pseudo_inverse().eval(Rat(2)) == ExtRat(0));
}

TEST_CASE("pseudo-inverses of bounded curves reach +inf") {
  // f(t) = min(t, 4): bounded, so f-down(x) = +inf past 4 and f-up(4) = +inf.
  Curve f = Curve::from_points({{Rat(0), ExtRat(0), ExtRat(0), Rat(1)},
                                {Rat(4), ExtRat(4), ExtRat(4), Rat(0)}});
  Curve down = f.lower_pseudo_inverse();
  CHECK(ev(down, 4) == ExtRat(4));
  CHECK(ev(down, 5).is_pos_inf());
  Curve up = f.upper_pseudo_inverse();
  CHECK(ev(up, 3) == ExtRat(3));
  CHECK(ev(up, 4).is_pos_inf());
}

TEST_CASE("pseudo-inverses of the zero and infinite curves") {
  Curve zero = Curve::zero();
  Curve up = zero.upper_pseudo_inverse();
  CHECK(ev(up, 0).is_pos_inf());
  Curve down = zero.lower_pseudo_inverse();
  CHECK(ev(down, 0) == ExtRat(0));
  CHECK(ev(down, 1).is_pos_inf());

  Curve inf = Curve::constant(ExtRat::pos_inf());
  CHECK(ev(inf.lower_pseudo_inverse(), 100) == ExtRat(0));
  CHECK(ev(inf.upper_pseudo_inverse(), 100) == ExtRat(0));
}

TEST_CASE("breakpoint curves respect jump structure") {
  // f(0) = 0, f(t) = 1 on (0, 2), f(2) = 3, f(t) = 3 + (t-2) beyond.
  Curve f = Curve::from_points({{Rat(0), ExtRat(0), ExtRat(0), Rat(0)},
                                {Rat(2), ExtRat(1), ExtRat(3), Rat(1)}});
  CHECK(ev(f, 0) == ExtRat(0));
  CHECK(ev(f, 1) == ExtRat(1));
  CHECK(ev(f, 2) == ExtRat(3));
  CHECK(f.limit(Rat(2), Side::Left) == ExtRat(1));
  CHECK(f.limit(Rat(2), Side::Right) == ExtRat(3));
  CHECK(ev(f, 4) == ExtRat(5));

  Curve down = f.lower_pseudo_inverse();
  CHECK(ev(down, 1, 2) == ExtRat(0));  // f exceeds 1/2 immediately after 0
  CHECK(ev(down, 1) == ExtRat(0));
  CHECK(ev(down, 2) == ExtRat(2));
  CHECK(ev(down, 3) == ExtRat(2));
  CHECK(ev(down, 4) == ExtRat(3));
}

TEST_CASE("invalid curves are rejected") {
  CHECK_THROWS_AS(Curve::from_points({{Rat(1), ExtRat(0), ExtRat(0), Rat(0)}}), curve_error);
  CHECK_THROWS_AS(Curve::from_points({{Rat(0), ExtRat(0), ExtRat(0), Rat(0)},
                                      {Rat(1), ExtRat(0), ExtRat(0), Rat(0)},
                                      {Rat(1), ExtRat(0), ExtRat(0), Rat(0)}}),
                  curve_error);
  // Value drops below the incoming segment.
  CHECK_THROWS_AS(Curve::from_points({{Rat(0), ExtRat(0), ExtRat(2), Rat(0)},
                                      {Rat(1), ExtRat(1), ExtRat(1), Rat(0)}}),
                  curve_error);
  CHECK_THROWS_AS(Curve::from_breakpoints({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(0), Rat(-1)}}),
                  curve_error);
  // Left value above the value at the point.
  CHECK_THROWS_AS(
      Curve::from_breakpoints({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(5), Rat(0)},
                               {Rat(1), ExtRat(5), ExtRat(4), ExtRat(5), Rat(0)}}),
      curve_error);
}

TEST_CASE("left and right continuous versions") {
  Curve sc = Curve::staircase(Rat(2), Rat(1));
  CHECK(sc.is_left_continuous());
  CHECK(!sc.is_right_continuous());
  Curve plus = sc.right_continuous();
  CHECK(plus.is_right_continuous());
  CHECK(plus.eval(Rat(2)) == ExtRat(2));
  CHECK(sc.eval(Rat(2)) == ExtRat(1));

  // (f+)- recovers the staircase away from 0; at 0 there is no left limit
  // and the convention keeps f+(0).
  Curve again = plus.left_continuous();
  CHECK(again.eval(Rat(0)) == ExtRat(1));
  for (long num : {1, 2, 3, 4, 7, 8, 12}) {
    Rat t(num, 2);
    CHECK(again.eval(t) == sc.eval(t));
  }

  // A curve continuous at 0 with a left-continuous jump round-trips exactly.
  Curve f = Curve::from_points({{Rat(0), ExtRat(0), ExtRat(0), Rat(1)},
                                {Rat(2), ExtRat(2), ExtRat(2), Rat(0)},
                                {Rat(4), ExtRat(2), ExtRat(2), Rat(1)},
                                {Rat(5), ExtRat(6), ExtRat(6), Rat(1)}});
  CHECK(f.is_left_continuous());
  CHECK(f.right_continuous().left_continuous() == f);
}

TEST_CASE("exact curve equality") {
  CHECK(Curve::staircase(Rat(2), Rat(3)) == Curve::staircase(Rat(2), Rat(3)));
  CHECK(Curve::staircase(Rat(2), Rat(3)) != Curve::staircase(Rat(2), Rat(4)));
  CHECK(Curve::affine(Rat(1), Rat(0)) == Curve::identity());
  // A periodic description of a pure ramp collapses to the affine form.
  Curve ramp = Curve::from_breakpoints({{Rat(0), ExtRat(0), ExtRat(0), ExtRat(0), Rat(2)}},
                                       PeriodicTail{Rat(0), Rat(3), Rat(6)});
  CHECK(ramp == Curve::affine(Rat(2), Rat(0)));
  CHECK(!ramp.periodic().has_value());
  // Same staircase declared with a doubled period.
  Curve doubled = Curve::from_breakpoints(
      {{Rat(0), ExtRat(0), ExtRat(0), ExtRat(1), Rat(0)},
       {Rat(2), ExtRat(1), ExtRat(1), ExtRat(2), Rat(0)}},
      PeriodicTail{Rat(0), Rat(4), Rat(2)});
  CHECK(doubled == Curve::staircase(Rat(2), Rat(1)));
  // Same staircase with the repetition anchored one step later.
  Curve shifted = Curve::from_breakpoints(
      {{Rat(0), ExtRat(0), ExtRat(0), ExtRat(1), Rat(0)},
       {Rat(2), ExtRat(1), ExtRat(1), ExtRat(2), Rat(0)}},
      PeriodicTail{Rat(2), Rat(2), Rat(1)});
  CHECK(shifted == Curve::staircase(Rat(2), Rat(1)));
  CHECK(shifted != Curve::staircase(Rat(2), Rat(2)));
}

TEST_CASE("periodic tails with zero increment collapse to plateaus") {
  Curve c = Curve::from_breakpoints({{Rat(0), ExtRat(2), ExtRat(2), ExtRat(2), Rat(0)}},
                                    PeriodicTail{Rat(0), Rat(5), Rat(0)});
  CHECK(!c.periodic().has_value());
  CHECK(ev(c, 100) == ExtRat(2));
}
