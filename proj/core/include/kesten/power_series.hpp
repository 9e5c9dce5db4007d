#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "kesten/multipoly.hpp"

namespace kesten {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated formal power series in z with MultiPoly coefficients, exact
/// through z^order. Binary operations truncate to the smaller order of the
/// two operands, so a result never carries coefficients that one of its
/// inputs did not determine.
class PowerSeries {
 public:
  /// Coefficients past `order` are dropped; missing ones are zero.
  PowerSeries(std::vector<MultiPoly> coefficients, unsigned order);
  static PowerSeries constant(const MultiPoly& c, unsigned order);
  static PowerSeries z(unsigned order);

  unsigned order() const { return order_; }
  const MultiPoly& operator[](unsigned k) const;
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }

  PowerSeries truncated(unsigned order) const;
  PowerSeries derivative() const;  // order drops by one (order 0 stays 0)
  PowerSeries pow(unsigned e) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const MultiPoly& c, const PowerSeries& a);

  /// Index of the first coefficient where a and b differ, up to and
  /// including `through`; nullopt if they agree.
  friend std::optional<unsigned> first_mismatch(const PowerSeries& a, const PowerSeries& b,
                                                unsigned through);

 private:
  std::vector<MultiPoly> coeffs_;  // size order_ + 1
  unsigned order_;
};

/// u with s * u = 1 through s.order(). The constant term must be a nonzero
/// rational; otherwise throws SeriesError("constant term not invertible").
PowerSeries series_invert(const PowerSeries& s);

/// u with u^2 = s and u(0) = 1. Requires s(0) = 1.
PowerSeries series_sqrt(const PowerSeries& s);

}  // namespace kesten
