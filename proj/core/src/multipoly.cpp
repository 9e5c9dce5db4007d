#include "kesten/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace kesten {

std::uint32_t Monomial::degree(Var v) const {
  switch (v) {
    case Var::p:
      return p;
    case Var::q:
      return q;
    case Var::T:
      return t;
  }
  return 0;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(Var v, std::uint32_t power) {
  Monomial m;
  switch (v) {
    case Var::p:
      m.p = power;
      break;
    case Var::q:
      m.q = power;
      break;
    case Var::T:
      m.t = power;
      break;
  }
  return term(m, Rational(1));
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly r;
  if (c != 0) r.terms_.emplace(m, c);
  return r;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> MultiPoly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MultiPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total();
}

bool MultiPoly::has_nonnegative_coefficients() const {
  for (const auto& [m, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term(ma * mb, prod);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& rhs) {
  if (rhs == 0) throw std::domain_error("MultiPoly: division by zero");
  for (auto& [m, c] : terms_) c /= rhs;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  MultiPoly result;
  std::vector<MultiPoly> powers{MultiPoly(1L)};
  for (const auto& [m, c] : terms_) {
    std::uint32_t d = m.degree(v);
    while (powers.size() <= d) powers.push_back(powers.back() * value);
    Monomial rest = m;
    switch (v) {
      case Var::p:
        rest.p = 0;
        break;
      case Var::q:
        rest.q = 0;
        break;
      case Var::T:
        rest.t = 0;
        break;
    }
    result += term(rest, c) * powers[d];
  }
  return result;
}

MultiPoly MultiPoly::swap_pq() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.q, m.p, m.t}, c);
  return r;
}

Rational pow(const Rational& base, std::uint32_t e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

Rational MultiPoly::evaluate(const Rational& p, const Rational& q, const Rational& t) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    sum += c * kesten::pow(p, m.p) * kesten::pow(q, m.q) * kesten::pow(t, m.t);
  }
  return sum;
}

double MultiPoly::evaluate(double p, double q, double t) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    sum += c.get_d() * std::pow(p, m.p) * std::pow(q, m.q) * std::pow(t, m.t);
  }
  return sum;
}

namespace {

void append_power(std::string& out, const char* name, std::uint32_t e) {
  if (e == 0) return;
  out += name;
  if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one() || magnitude != 1) out += kesten::to_string(magnitude);
    append_power(out, "p", m.p);
    append_power(out, "q", m.q);
    append_power(out, "T", m.t);
  }
  return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  const auto& [lead_m, lead_c] = *den.terms().rbegin();
  MultiPoly remainder = num;
  MultiPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().rbegin();
    if (!lead_m.divides(rm)) return std::nullopt;
    Monomial step{rm.p - lead_m.p, rm.q - lead_m.q, rm.t - lead_m.t};
    MultiPoly t = MultiPoly::term(step, rc / lead_c);
    quotient += t;
    remainder -= t * den;
  }
  return quotient;
}

}  // namespace kesten
