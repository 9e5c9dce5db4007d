#include <doctest.h>

#include "kesten/power_series.hpp"

using namespace kesten;

TEST_CASE("inversion and square root are exact through the order") {
  const MultiPoly p = MultiPoly::p();
  const unsigned N = 8;
  const PowerSeries s({MultiPoly(1L), p, MultiPoly(3L), p * p}, N);
  const PowerSeries one = PowerSeries::constant(MultiPoly(1L), N);
  CHECK_FALSE(first_mismatch(s * series_invert(s), one, N));
  const PowerSeries root = series_sqrt(s);
  CHECK_FALSE(first_mismatch(root * root, s, N));
}

TEST_CASE("catalan generating function from the square root") {
  // C(z) = (1 - sqrt(1 - 4z)) / (2z)
  const unsigned N = 9;
  const PowerSeries root = series_sqrt(PowerSeries({MultiPoly(1L), MultiPoly(-4L)}, N));
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (unsigned n = 0; n + 1 <= N; ++n) CHECK(root[n + 1] == MultiPoly(Rational(-2 * catalan[n])));
}

TEST_CASE("non-invertible constant terms are rejected") {
  CHECK_THROWS_AS(series_invert(PowerSeries({MultiPoly(), MultiPoly(1L)}, 3)), SeriesError);
  CHECK_THROWS_AS(series_invert(PowerSeries({MultiPoly::p()}, 3)), SeriesError);
  CHECK_THROWS_AS(series_sqrt(PowerSeries({MultiPoly(2L)}, 3)), SeriesError);
}

TEST_CASE("truncation bookkeeping") {
  const PowerSeries a({MultiPoly(1L), MultiPoly(1L), MultiPoly(1L)}, 5);
  const PowerSeries b({MultiPoly(1L)}, 2);
  CHECK((a * b).order() == 2);
  CHECK(a.derivative().order() == 4);
  CHECK(a.derivative()[1] == MultiPoly(2L));
  CHECK_THROWS(a[6]);
  CHECK_THROWS(first_mismatch(a, b, 3));
}
