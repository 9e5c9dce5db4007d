#include "kesten/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace kesten {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not a number: '" + std::string(whole) + "'");
  }
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(s.substr(e + 1));
    std::string_view digits = exp_text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      digits.remove_prefix(1);
    }
    if (!all_digits(digits) || digits.size() > 6) {
      throw ParseError("bad exponent in '" + std::string(whole) + "'");
    }
    exponent = std::strtol(exp_text.c_str(), nullptr, 10);
    s = s.substr(0, e);
  }
  std::string mantissa;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("not a number: '" + std::string(whole) + "'");
    }
    mantissa = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw ParseError("not a number: '" + std::string(whole) + "'");
    }
    mantissa = std::string(s);
  }
  Rational value{Integer(mantissa, 10)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= scale;
  } else {
    value *= scale;
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) {
    return parse_decimal(text, text);
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan(unsigned n) {
  return binomial(2 * static_cast<long>(n), n) / (n + 1);
}

}  // namespace kesten
