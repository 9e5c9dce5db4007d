#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kesten/kesten_measure.hpp"
#include "kesten/moments.hpp"

using namespace kesten;

TEST_CASE("density at the origin and the edges") {
  CHECK(KestenMeasure(1, 1).density(0) == doctest::Approx(1 / std::numbers::pi));
  CHECK(KestenMeasure(0, 1).density(0) == doctest::Approx(1 / (std::numbers::pi * std::sqrt(2.0))));
  const KestenMeasure m(0.4, 0.9);
  CHECK(m.edge() == doctest::Approx(std::sqrt(2 * 1.3)));
  CHECK(m.density(m.edge()) == 0);
  CHECK(m.density(-m.edge() - 1) == 0);
  CHECK(m.density(0.3) == doctest::Approx(m.density(-0.3)));
}

TEST_CASE("atoms appear only below s = 1") {
  CHECK(KestenMeasure(0.5, 0.5).atoms().empty());
  CHECK(KestenMeasure(2, 1).atoms().empty());
  const KestenMeasure m(0.3, 0.2);
  REQUIRE(m.atoms().size() == 2);
  for (const auto& a : m.atoms()) {
    CHECK(std::abs(a.position) == doctest::Approx(1 / std::sqrt(1 - 0.25)));
    CHECK(a.mass == doctest::Approx(1.0 / 3));
  }
  const auto residues = atom_masses(m);
  REQUIRE(residues.size() == 2);
  CHECK(residues[0].mass == doctest::Approx(1.0 / 3));
}

TEST_CASE("quadrature reproduces the exact moments") {
  const double points[][2] = {{1, 1}, {0, 1}, {0.3, 0.2}, {0.05, 0.1}, {1.5, 0.5}, {0.7, 0}};
  for (const auto& pt : points) {
    const KestenMeasure m(pt[0], pt[1]);
    CAPTURE(pt[0]);
    CAPTURE(pt[1]);
    CHECK(quadrature_moment(m, 0) == doctest::Approx(1).epsilon(1e-10));
    CHECK(std::abs(quadrature_moment(m, 3)) < 1e-10);
    for (unsigned n = 1; n <= 5; ++n) {
      const double exact = r_by_delaney(n).evaluate(pt[0], pt[1]);
      CHECK(quadrature_moment(m, 2 * n) == doctest::Approx(exact).epsilon(1e-10));
    }
  }
  CHECK_THROWS(quadrature_moment(KestenMeasure(1, 1), 13));
}

TEST_CASE("Cauchy transform values") {
  CHECK(KestenMeasure(1, 1).cauchy({3, 0}).real() == doctest::Approx((3 - std::sqrt(5.0)) / 2));
  CHECK(KestenMeasure::boolean_limit().cauchy({2, 0}).real() == doctest::Approx(2.0 / 3));
  CHECK_THROWS_AS(KestenMeasure(1, 1).cauchy({1, 0}), CutError);
}

TEST_CASE("the Cauchy transform maps the upper half-plane to the lower") {
  const KestenMeasure m(0.3, 0.6);
  for (double x = -4; x <= 4; x += 0.5) {
    for (double y : {0.01, 0.5, 3.0}) {
      CHECK(m.cauchy({x, y}).imag() < 0);
    }
  }
  // -Im G(x + i eps) / pi recovers the density
  const double eps = 1e-7;
  for (double x : {-1.0, 0.0, 0.4, 1.2}) {
    CHECK(-m.cauchy({x, eps}).imag() / std::numbers::pi == doctest::Approx(m.density(x)).epsilon(1e-5));
  }
}

TEST_CASE("boolean limit and parameter validation") {
  const auto b = KestenMeasure::boolean_limit();
  CHECK(b.is_boolean_limit());
  REQUIRE(b.atoms().size() == 2);
  CHECK(b.atoms()[0].mass == doctest::Approx(0.5));
  CHECK(quadrature_moment(b, 4) == doctest::Approx(1));
  CHECK_THROWS(KestenMeasure(0, 0));
  CHECK_THROWS(KestenMeasure(-1, 2));
}
