#include <doctest.h>

#include "kesten/rational.hpp"

using namespace kesten;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("17") == Rational(17));
  CHECK(parse_rational("0.35") == Rational(7, 20));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational(" 1/3 ") == Rational(1, 3));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5/2"), ParseError);
}

TEST_CASE("to_string omits a unit denominator") {
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_string(make_rational(4, 6)) == "2/3");
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (unsigned n = 0; n < 9; ++n) CHECK(catalan(n) == expected[n]);
}
