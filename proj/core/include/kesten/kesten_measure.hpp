#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace kesten {

struct Atom {
  double position = 0;
  double mass = 0;
};

class CutError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The symmetric law with density
///   f(x) = (1/pi) sqrt(2s - x^2) / (2 - (2 - s) x^2),  s = p + q,
/// on [-sqrt(2s), sqrt(2s)], plus two atoms at +-1/sqrt(1 - s/2) when s < 1.
class KestenMeasure {
 public:
  /// Requires p, q >= 0 and p + q > 0.
  KestenMeasure(double p, double q);

  /// p = q = 0: the two-point law (delta_{-1} + delta_{1}) / 2, no density.
  static KestenMeasure boolean_limit();

  double p() const { return p_; }
  double q() const { return q_; }
  double s() const { return p_ + q_; }
  double edge() const { return edge_; }
  bool is_boolean_limit() const { return boolean_; }

  /// Zero outside the open support, including at the edges.
  double density(double x) const;

  /// G(z) = ((s-1) z - z sqrt(1 - 2s/z^2)) / (2 - (2-s) z^2), principal root.
  /// Throws CutError on the support [-edge, edge] of the real line.
  std::complex<double> cauchy(std::complex<double> z) const;

  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  KestenMeasure() = default;

  double p_ = 0;
  double q_ = 0;
  double edge_ = 0;
  bool boolean_ = false;
  std::vector<Atom> atoms_;
};

/// Atoms as residues of G at its real poles off the support; empty when s >= 1.
std::vector<Atom> atom_masses(const KestenMeasure& m);

inline std::complex<double> cauchy_eval(const KestenMeasure& m, std::complex<double> z) { return m.cauchy(z); }

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

inline constexpr std::size_t kMaxQuadratureNodes = std::size_t{1} << 20;

/// int x^n f(x) dx + sum of position^n mass over atoms. The density part is
/// integrated in theta with x = edge sin(theta), which removes the square
/// root at the edges, by adaptive Simpson to absolute tolerance `tol`.
/// Throws QuadratureError if more than 2^20 nodes would be needed. n <= 12.
double quadrature_moment(const KestenMeasure& m, unsigned n, double tol = 1e-12);

}  // namespace kesten
