#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>

#include "kesten/rational.hpp"

namespace kesten {

/// The three formal symbols every value in the library lives over: the
/// interpolation parameters p, q and the time symbol T (only the Poisson
/// engine ever produces a nonzero T-degree).
enum class Var { p, q, T };

struct Monomial {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint32_t t = 0;

  std::uint32_t total() const { return p + q + t; }
  std::uint32_t degree(Var v) const;
  bool is_one() const { return p == 0 && q == 0 && t == 0; }
  bool divides(const Monomial& other) const {
    return p <= other.p && q <= other.q && t <= other.t;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.p + b.p, a.q + b.q, a.t + b.t};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: total degree ascending, then exponent triple
/// (deg_p, deg_q, deg_T) descending. This is a graded monomial order, so the
/// last stored term is the leading term.
struct CanonicalTermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    if (a.p != b.p) return a.p > b.p;
    if (a.q != b.q) return a.q > b.q;
    return a.t > b.t;
  }
};

/// Exact polynomial in p, q, T with rational coefficients. Zero
/// coefficients are never stored, so structural equality is mathematical
/// equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, CanonicalTermOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v, std::uint32_t power = 1);
  static MultiPoly p() { return variable(Var::p); }
  static MultiPoly q() { return variable(Var::q); }
  static MultiPoly T() { return variable(Var::T); }
  static MultiPoly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> as_constant() const;
  Rational coefficient(const Monomial& m) const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool has_nonnegative_coefficients() const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& rhs);
  MultiPoly& operator/=(const Rational& rhs);  // throws std::domain_error on zero

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(std::uint32_t e) const;

  /// Replaces every occurrence of `v` by `value`.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// Exchanges p and q.
  MultiPoly swap_pq() const;

  Rational evaluate(const Rational& p, const Rational& q, const Rational& t = Rational(0)) const;
  double evaluate(double p, double q, double t = 0.0) const;

  /// Canonical rendering, e.g. "1 + p + q + 1/2p^2 + pq + 1/2q^2".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

/// Exact quotient num/den, or nullopt if den does not divide num.
/// Throws std::domain_error when den is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

Rational pow(const Rational& base, std::uint32_t e);

}  // namespace kesten
