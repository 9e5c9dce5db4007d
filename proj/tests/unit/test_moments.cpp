#include <doctest.h>

#include "kesten/moments.hpp"
#include "kesten/partition.hpp"
#include "kesten/series_checks.hpp"
#include "oracles.hpp"

using namespace kesten;

namespace {
const MultiPoly p = MultiPoly::p();
const MultiPoly q = MultiPoly::q();
}  // namespace

TEST_CASE("low even moments") {
  const MultiPoly s = p + q;
  CHECK(r_by_enumeration(1) == MultiPoly(1L));
  CHECK(r_by_enumeration(2) == MultiPoly(1L) + s / Rational(2));
  CHECK(r_by_enumeration(3) == MultiPoly(1L) + s + s * s / Rational(2));
  CHECK(r_by_closed_form(3)[3].to_string() == "1 + p + q + 1/2p^2 + pq + 1/2q^2");
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (unsigned n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(r_by_enumeration(n) == oracle::r(n));
  }
}

TEST_CASE("all routes agree") {
  const unsigned N = 6;
  const auto table = sequences_by_recursion(N);
  const auto closed = r_by_closed_form(N);
  const auto jacobi = r_by_jacobi(N);
  for (unsigned n = 0; n <= N; ++n) {
    CAPTURE(n);
    CHECK(table.r[n] == closed[n]);
    CHECK(table.r[n] == jacobi[n]);
    CHECK(table.r[n] == r_by_delaney(n));
    if (n <= 5) CHECK(table.r[n] == r_by_enumeration(n));
  }
  const auto report = compute_moment(4, all_routes());
  CHECK(report.agreement);
  CHECK(report.routes.size() == 5);
}

TEST_CASE("the auxiliary sequences match their enumerations") {
  const auto table = sequences_by_recursion(5, 3);
  for (unsigned n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(table.s[n] == s_by_enumeration(n));
    CHECK(table.a[n - 1] == a_by_enumeration(n - 1));
    for (unsigned r = 1; r <= 3; ++r) CHECK(table.s_r[r][n] == s_outer_by_enumeration(n, r));
  }
  CHECK(series_identity_checks(sequences_by_recursion(7, 3)).passed());
}

TEST_CASE("specializations") {
  for (unsigned n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const MultiPoly r = r_by_delaney(n);
    // p = q = 1: Catalan numbers
    CHECK(r.evaluate(Rational(1), Rational(1)) == Rational(catalan(n)));
    // p + q = 1: arcsine law moments C(2n, n) / 2^n
    const Rational arcsine = Rational(binomial(2 * n, n)) / pow(Rational(2), n);
    CHECK(r.evaluate(Rational(0), Rational(1)) == arcsine);
    CHECK(r.evaluate(Rational(1), Rational(0)) == arcsine);
    CHECK(r.evaluate(Rational(1, 3), Rational(2, 3)) == arcsine);
    // boolean: every even moment is one
    CHECK(r.evaluate(Rational(0), Rational(0)) == Rational(1));
    CHECK(r.swap_pq() == r);
  }
}

TEST_CASE("Delaney and Euler numbers") {
  CHECK(delaney(2, 1) == Rational(1));
  CHECK(delaney(3, 2) == Rational(2));
  CHECK(delaney(3, 3) == Rational(0));
  CHECK(gen_euler(2, 1, 0, EulerRoute::formula) == Rational(1));
  CHECK(gen_euler(2, 0, 0, EulerRoute::formula) == Rational(2));
  CHECK(gen_euler(3, 1, 1, EulerRoute::formula) == Rational(6));
  for (unsigned n = 1; n <= 5; ++n) {
    const auto table = gen_euler_table(n);
    for (long k = 0; k < static_cast<long>(n); ++k) {
      for (long j = 0; j < static_cast<long>(n); ++j) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(j);
        const Rational e = gen_euler(n, k, j, EulerRoute::formula);
        CHECK(e == Rational(table[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        CHECK(e == gen_euler(n, k, j, EulerRoute::enumeration));
      }
    }
  }
}

TEST_CASE("odd moments vanish and limits are enforced") {
  CHECK(kesten_moment(5).is_zero());
  CHECK(kesten_moment(4) == r_by_delaney(2));
  CHECK_THROWS_AS(r_by_enumeration(8), LimitError);
}
