#include "kesten/power_series.hpp"

#include <algorithm>

namespace kesten {

PowerSeries::PowerSeries(std::vector<MultiPoly> coefficients, unsigned order)
    : coeffs_(std::move(coefficients)), order_(order) {
  coeffs_.resize(order_ + 1);
}

PowerSeries PowerSeries::constant(const MultiPoly& c, unsigned order) {
  return PowerSeries({c}, order);
}

PowerSeries PowerSeries::z(unsigned order) {
  return PowerSeries({MultiPoly(), MultiPoly(1L)}, order);
}

const MultiPoly& PowerSeries::operator[](unsigned k) const {
  if (k > order_) throw std::out_of_range("PowerSeries: coefficient beyond truncation order");
  return coeffs_[k];
}

PowerSeries PowerSeries::truncated(unsigned order) const {
  if (order > order_) throw std::out_of_range("PowerSeries: cannot extend truncation order");
  return PowerSeries(coeffs_, order);
}

PowerSeries PowerSeries::derivative() const {
  if (order_ == 0) return PowerSeries({}, 0);
  std::vector<MultiPoly> d(order_);
  for (unsigned k = 1; k <= order_; ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return PowerSeries(std::move(d), order_ - 1);
}

PowerSeries PowerSeries::pow(unsigned e) const {
  PowerSeries result = constant(MultiPoly(1L), order_);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  coeffs_.resize(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  coeffs_.resize(order_ + 1);
  for (unsigned k = 0; k <= order_; ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  unsigned order = std::min(a.order_, b.order_);
  std::vector<MultiPoly> c(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (!b.coeffs_[j].is_zero()) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return PowerSeries(std::move(c), order);
}

PowerSeries operator*(const MultiPoly& c, const PowerSeries& a) {
  std::vector<MultiPoly> out;
  out.reserve(a.coeffs_.size());
  for (const auto& k : a.coeffs_) out.push_back(c * k);
  return PowerSeries(std::move(out), a.order_);
}

std::optional<unsigned> first_mismatch(const PowerSeries& a, const PowerSeries& b,
                                       unsigned through) {
  if (through > a.order_ || through > b.order_) {
    throw std::out_of_range("first_mismatch: comparison beyond truncation order");
  }
  for (unsigned k = 0; k <= through; ++k) {
    if (!(a.coeffs_[k] == b.coeffs_[k])) return k;
  }
  return std::nullopt;
}

PowerSeries series_invert(const PowerSeries& s) {
  auto c0 = s[0].as_constant();
  if (!c0 || *c0 == 0) throw SeriesError("constant term not invertible");
  const Rational inv = 1 / *c0;
  std::vector<MultiPoly> u(s.order() + 1);
  u[0] = MultiPoly(inv);
  for (unsigned n = 1; n <= s.order(); ++n) {
    MultiPoly acc;
    for (unsigned k = 1; k <= n; ++k) {
      if (!s[k].is_zero()) acc += s[k] * u[n - k];
    }
    u[n] = -acc * inv;
  }
  return PowerSeries(std::move(u), s.order());
}

PowerSeries series_sqrt(const PowerSeries& s) {
  if (!(s[0] == MultiPoly(1L))) throw SeriesError("square root requires constant term 1");
  const Rational half(1, 2);
  std::vector<MultiPoly> u(s.order() + 1);
  u[0] = MultiPoly(1L);
  for (unsigned n = 1; n <= s.order(); ++n) {
    MultiPoly acc = s[n];
    for (unsigned k = 1; k < n; ++k) acc -= u[k] * u[n - k];
    u[n] = acc * half;
  }
  return PowerSeries(std::move(u), s.order());
}

}  // namespace kesten
