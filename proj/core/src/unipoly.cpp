#include "kesten/unipoly.hpp"

#include <algorithm>

namespace kesten {

namespace {
const MultiPoly kZero;
}

UniPoly::UniPoly(std::vector<MultiPoly> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(const MultiPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UniPoly UniPoly::x(std::uint32_t power) {
  std::vector<MultiPoly> c(power + 1);
  c[power] = MultiPoly(1L);
  return UniPoly(std::move(c));
}

const MultiPoly& UniPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const MultiPoly& c, const UniPoly& a) {
  std::vector<MultiPoly> out;
  out.reserve(a.coeffs_.size());
  for (const auto& k : a.coeffs_) out.push_back(c * k);
  return UniPoly(std::move(out));
}

MultiPoly UniPoly::evaluate(const MultiPoly& at) const {
  MultiPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

UniPoly UniPoly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<MultiPoly> c(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    c[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  }
  return UniPoly(std::move(c));
}

std::string UniPoly::to_string(const char* var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k > 0) out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

UniPoly integrate(const UniPoly& g, const Bound& lower, const Bound& upper) {
  UniPoly prim = g.antiderivative();
  auto at = [&](const Bound& b) -> UniPoly {
    return b.is_variable() ? prim : UniPoly(prim.evaluate(b.value()));
  };
  return at(upper) - at(lower);
}

MultiPoly integrate_definite(const UniPoly& g, const MultiPoly& lower, const MultiPoly& upper) {
  UniPoly prim = g.antiderivative();
  return prim.evaluate(upper) - prim.evaluate(lower);
}

}  // namespace kesten
