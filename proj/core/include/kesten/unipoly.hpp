#pragma once

#include <string>
#include <vector>

#include "kesten/multipoly.hpp"

namespace kesten {

/// Polynomial in a single coordinate x with MultiPoly coefficients;
/// coefficients()[k] multiplies x^k. The zero polynomial is the empty list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<MultiPoly> coefficients);
  UniPoly(const MultiPoly& constant);  // NOLINT(google-explicit-constructor)

  static UniPoly x(std::uint32_t power = 1);

  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  const MultiPoly& coefficient(std::size_t k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const MultiPoly& c, const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Horner evaluation at an arbitrary MultiPoly (e.g. a rational or T).
  MultiPoly evaluate(const MultiPoly& at) const;
  /// Antiderivative vanishing at x = 0.
  UniPoly antiderivative() const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<MultiPoly> coeffs_;
};

/// Integration bound: a fixed MultiPoly value (rational constant or T) or
/// the free coordinate x itself, for running integrals such as the
/// weighted inner product's p*int_lo^x + q*int_x^hi split.
class Bound {
 public:
  static Bound at(MultiPoly value) { return Bound(std::move(value), false); }
  static Bound variable() { return Bound(MultiPoly(), true); }

  bool is_variable() const { return variable_; }
  const MultiPoly& value() const { return value_; }

 private:
  Bound(MultiPoly v, bool variable) : value_(std::move(v)), variable_(variable) {}
  MultiPoly value_;
  bool variable_;
};

/// Exact integral of g over [lower, upper]. Returns a UniPoly in x when a
/// bound is the variable, otherwise a degree-0 UniPoly.
UniPoly integrate(const UniPoly& g, const Bound& lower, const Bound& upper);
/// Convenience for constant bounds.
MultiPoly integrate_definite(const UniPoly& g, const MultiPoly& lower, const MultiPoly& upper);

}  // namespace kesten
