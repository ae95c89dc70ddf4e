#include "doctest.h"
#include "rational.hpp"

using namespace pireg;

TEST_CASE("rationals stay canonical and exact") {
  Rat a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(a.str() == "1/2");
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK(Rat(6, 3).str() == "2");
  CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
  CHECK((Rat(1, 3) * Rat(3, 7)) == Rat(1, 7));
  CHECK((Rat(1) / Rat(3)) == Rat(1, 3));
  CHECK_THROWS_AS(Rat(1) / Rat(0), domain_error);
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
}

TEST_CASE("rational parsing mirrors the trace format") {
  CHECK(*Rat::parse("3/4") == Rat(3, 4));
  CHECK(*Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(*Rat::parse("17") == Rat(17));
  CHECK(!Rat::parse("3/0"));
  CHECK(!Rat::parse("3/-2"));
  CHECK(!Rat::parse("a"));
  CHECK(!Rat::parse("1.5"));
  CHECK(!Rat::parse(""));
  CHECK(Rat::parse("10/4")->str() == "5/2");
}

TEST_CASE("rational lcm") {
  CHECK(Rat::lcm(Rat(1, 2), Rat(1, 3)) == Rat(1));
  CHECK(Rat::lcm(Rat(3, 2), Rat(2)) == Rat(6));
  CHECK(Rat::lcm(Rat(5), Rat(5)) == Rat(5));
}

TEST_CASE("extended rationals order and add") {
  ExtRat ni = ExtRat::neg_inf();
  ExtRat pi = ExtRat::pos_inf();
  ExtRat x{Rat(3, 2)};
  CHECK(ni < x);
  CHECK(x < pi);
  CHECK(ni < pi);
  CHECK(!(pi < pi));
  CHECK(ExtRat::max(ni, x) == x);
  CHECK(ExtRat::min(pi, x) == x);
  CHECK((ni + Rat(5)).is_neg_inf());
  CHECK((pi + Rat(-5)).is_pos_inf());
  CHECK((x + Rat(1, 2)) == ExtRat(Rat(2)));
  CHECK_THROWS_AS(ni + pi, domain_error);
  CHECK_THROWS_AS(ni.finite(), domain_error);
  CHECK(ni.str() == "-inf");
  CHECK(pi.str() == "inf");
}
