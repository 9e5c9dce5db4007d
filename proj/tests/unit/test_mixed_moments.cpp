#include <doctest.h>

#include <random>

#include "kesten/mixed_moments.hpp"
#include "kesten/moments.hpp"
#include "oracles.hpp"

using namespace kesten;

namespace {
const MultiPoly p = MultiPoly::p();
const MultiPoly q = MultiPoly::q();
const MultiPoly T = MultiPoly::T();
}  // namespace

TEST_CASE("two-interval example") {
  const auto sig = IntervalSignature::parse("f f g g f f", "g=[0,1],f=[1,2]");
  CHECK(mixed_moment_brownian(sig) == MultiPoly(1L) + (p * p + p * q) / Rational(2));
}

TEST_CASE("single interval reproduces the even moments") {
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(mixed_moment_brownian(IntervalSignature::single(2 * n)) == r_by_delaney(n));
  }
  // scaling: length 2 multiplies the fourth moment by 4
  CHECK(mixed_moment_brownian(IntervalSignature::single(4, Rational(2))) == MultiPoly(4L) * r_by_delaney(2));
}

TEST_CASE("random words against the brute-force oracle") {
  std::mt19937_64 rng(7);
  const std::vector<Rational> lengths = {Rational(1, 2), Rational(2), Rational(3, 4)};
  std::vector<Interval> intervals = {{Rational(0), Rational(1, 2)},
                                     {Rational(1, 2), Rational(5, 2)},
                                     {Rational(5, 2), Rational(13, 4)}};
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + 2 * (rng() % 4);
    std::vector<std::size_t> word(n);
    for (auto& w : word) w = rng() % 3;
    if (trial % 2 == 0) {
      for (std::size_t j = 0; j < n / 2; ++j) word[j + n / 2] = word[j];
    }
    CAPTURE(trial);
    CHECK(mixed_moment_brownian(IntervalSignature(intervals, word)) == oracle::brownian(word, lengths));
  }
}

TEST_CASE("Poisson moments against the oracle") {
  CHECK(poisson_moment(1) == T);
  CHECK(poisson_moment(2) == T + T * T);
  for (unsigned n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(poisson_moment(n) == oracle::poisson(n));
  }
}

TEST_CASE("Poisson moments at p = q = 1 count Narayana numbers") {
  const MultiPoly f = poisson_moment(5);
  const long narayana[] = {1, 10, 20, 10, 1};
  for (std::uint32_t k = 1; k <= 5; ++k) {
    MultiPoly c;
    for (const auto& [m, coeff] : f.terms()) {
      if (m.t == k) c += MultiPoly::term(Monomial{m.p, m.q, 0}, coeff);
    }
    CHECK(c.evaluate(Rational(1), Rational(1)) == Rational(narayana[k - 1]));
  }
}

TEST_CASE("pyramidal factorization") {
  for (unsigned m = 1; m <= 4; ++m) {
    for (const auto& c : factorization_checks(m, {})) {
      CAPTURE(m);
      CHECK(c.holds());
    }
  }
  for (const auto& c : factorization_checks(3, {Rational(1, 2), Rational(3), Rational(2, 3)})) CHECK(c.holds());
}
