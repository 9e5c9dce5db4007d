#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kesten {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. GMP does the heavy lifting; these helpers cover parsing,
/// canonical text and the handful of integer utilities the rest of the
/// library needs.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a", "-a/b" or a plain decimal such as "0.35" / "1e-3" into an
/// exact rational. Decimal input is converted digit-for-digit, never through
/// a double.
Rational parse_rational(std::string_view text);

/// "num/den", with the denominator omitted when it is 1.
std::string to_string(const Rational& value);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // 0 outside 0 <= k <= n
Integer catalan(unsigned n);

}  // namespace kesten
