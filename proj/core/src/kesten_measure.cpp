#include "kesten/kesten_measure.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

namespace kesten {

KestenMeasure::KestenMeasure(double p, double q) : p_(p), q_(q) {
  if (!(p >= 0) || !(q >= 0)) throw std::invalid_argument("Kesten measure needs p, q >= 0");
  if (!(p + q > 0)) throw std::invalid_argument("Kesten measure needs p + q > 0; use boolean_limit()");
  edge_ = std::sqrt(2 * s());
  atoms_ = atom_masses(*this);
}

KestenMeasure KestenMeasure::boolean_limit() {
  KestenMeasure m;
  m.boolean_ = true;
  m.atoms_ = {{-1.0, 0.5}, {1.0, 0.5}};
  return m;
}

double KestenMeasure::density(double x) const {
  if (boolean_ || std::abs(x) >= edge_) return 0.0;
  const double denom = 2 - (2 - s()) * x * x;
  // For s < 1 the zeros of the denominator sit outside the support, for
  // s = 1 on the edge, and for s >= 2 there are none.
  if (!(denom > 0)) throw std::logic_error("density denominator vanishes inside the support");
  return std::sqrt(2 * s() - x * x) / (std::numbers::pi * denom);
}

std::complex<double> KestenMeasure::cauchy(std::complex<double> z) const {
  if (z.imag() == 0 && std::abs(z.real()) <= (boolean_ ? 1.0 : edge_)) {
    throw CutError("Cauchy transform evaluated on the real support");
  }
  if (boolean_) return z / (z * z - 1.0);
  const double S = s();
  const std::complex<double> root = z * std::sqrt(1.0 - 2 * S / (z * z));
  return ((S - 1) * z - root) / (2.0 - (2 - S) * z * z);
}

std::vector<Atom> atom_masses(const KestenMeasure& m) {
  if (m.is_boolean_limit()) return m.atoms();
  const double S = m.s();
  if (S >= 1) return {};
  const double x0 = 1 / std::sqrt(1 - S / 2);
  // Residue of N/D at the simple zero x0 of D(z) = 2 - (2-s) z^2.
  const double numerator = (S - 1) * x0 - x0 * std::sqrt(1 - 2 * S / (x0 * x0));
  const double derivative = -2 * (2 - S) * x0;
  const double mass = numerator / derivative;
  return {{-x0, mass}, {x0, mass}};
}

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  std::size_t nodes = 0;

  double run(double a, double b, double tol) {
    const double fa = f(a), fm = f((a + b) / 2), fb = f(b);
    nodes = 3;
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return refine(a, b, fa, fm, fb, whole, tol, 0);
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2, rm = (m + b) / 2;
    const double flm = f(lm), frm = f(rm);
    nodes += 2;
    if (nodes > kMaxQuadratureNodes) {
      throw QuadratureError("quadrature exceeded 2^20 nodes", whole);
    }
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth >= 6 && std::abs(delta) <= 15 * tol) return left + right + delta / 15;
    return refine(a, m, fa, flm, fm, left, tol / 2, depth + 1) + refine(m, b, fm, frm, fb, right, tol / 2, depth + 1);
  }
};

}  // namespace

double quadrature_moment(const KestenMeasure& m, unsigned n, double tol) {
  if (n > 12) throw std::invalid_argument("quadrature_moment supports n <= 12");
  if (!(tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
  double total = 0;
  for (const auto& atom : m.atoms()) total += std::pow(atom.position, n) * atom.mass;
  if (m.is_boolean_limit()) return total;

  // x = e sin(t): x^n f(x) dx = (e^{n+2}/pi) sin^n cos^2 / (2 - (2-s) e^2 sin^2) dt,
  // and 2 - (2-s) e^2 sin^2 = 2 cos^2 + 2 (1-s)^2 sin^2.
  const double e = m.edge();
  const double c = std::pow(e, n + 2) / std::numbers::pi;
  const double d = (1 - m.s()) * (1 - m.s());
  const std::function<double(double)> integrand = [&](double t) {
    const double sn = std::sin(t), cs = std::cos(t);
    const double denom = 2 * cs * cs + 2 * d * sn * sn;
    if (denom == 0) return 0.0;
    return c * std::pow(sn, n) * cs * cs / denom;
  };
  Simpson simpson{integrand};
  total += simpson.run(-std::numbers::pi / 2, std::numbers::pi / 2, tol);
  return total;
}

}  // namespace kesten
