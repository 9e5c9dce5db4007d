#include <doctest.h>

#include "kesten/signature.hpp"

using namespace kesten;

TEST_CASE("parsing renumbers intervals by position") {
  const auto sig = IntervalSignature::parse("f f g g f f", "g=[0,1],f=[1,2]");
  CHECK(sig.size() == 6);
  CHECK(sig.interval_count() == 2);
  CHECK(sig.interval(0).hi == Rational(1));
  CHECK(sig.at(0) == 1);
  CHECK(sig.at(2) == 0);
  CHECK(sig.name(0) == "g");
  const auto half = sig.half_multiplicities();
  REQUIRE(half);
  CHECK((*half)[0] == 1);
  CHECK((*half)[1] == 2);
}

TEST_CASE("odd multiplicities have no half multiplicities") {
  const auto sig = IntervalSignature::parse("f g g", "f=[0,1/2],g=[1/2,3/2]");
  CHECK_FALSE(sig.half_multiplicities());
  CHECK(sig.interval(1).length() == Rational(1));
}

TEST_CASE("bad supports are rejected") {
  CHECK_THROWS_AS(IntervalSignature::parse("f g", "f=[0,2],g=[1,3]"), SignatureError);
  CHECK_THROWS_AS(IntervalSignature::parse("f f", "f=[1,1]"), SignatureError);
  CHECK_THROWS_AS(IntervalSignature::parse("f f", "f=[-1,1]"), SignatureError);
  CHECK_THROWS_AS(IntervalSignature::parse("f h", "f=[0,1]"), SignatureError);
  CHECK_THROWS_AS(IntervalSignature({Interval{Rational(0), Rational(1)}}, {0, 1}), SignatureError);
}

TEST_CASE("identical supports merge") {
  const auto sig = IntervalSignature::parse("f g f g", "f=[0,1],g=[0,1]");
  CHECK(sig.interval_count() == 1);
}

TEST_CASE("adaptedness") {
  const auto sig = IntervalSignature::parse("f g g f", "f=[0,1],g=[1,2]");
  const SetPartition nested(4, {{1, 4}, {2, 3}});
  const SetPartition split(4, {{1, 2}, {3, 4}});
  CHECK(is_adapted(nested, sig));
  CHECK_FALSE(is_adapted(split, sig));
  // block {1,4} on the earlier interval must not be colored after {2,3}
  CHECK(is_adapted(OrderedPartition(nested, {0, 1}), sig));
  CHECK_FALSE(is_adapted(OrderedPartition(nested, {1, 0}), sig));
}
