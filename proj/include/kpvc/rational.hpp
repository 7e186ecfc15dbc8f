#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "kpvc/error.hpp"

namespace kpvc {

// Arbitrary precision, always reduced, denominator positive.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational frac(std::int64_t num, std::int64_t den) {
  require(den != 0, "zero denominator");
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// "p/q", or "p" when q == 1. Never a decimal.
inline std::string to_string(const Rational& r) {
  auto den = denominator_of(r);
  if (den == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + den.str();
}

// Always "p/q", even for integers.
inline std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw parse_error("bad rational literal '" + std::string(text) + "'");
  BigInt p(std::string(num[0] == '+' ? num.substr(1) : num));
  BigInt q(std::string(den[0] == '+' ? den.substr(1) : den));
  if (q == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

inline BigInt floor_of(const Rational& r) {
  BigInt q = numerator_of(r) / denominator_of(r);  // truncates toward zero
  if (r < 0 && q * denominator_of(r) != numerator_of(r)) q -= 1;
  return q;
}

inline BigInt ceil_of(const Rational& r) { return -floor_of(-r); }

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  require(b > 0, "ceil_div needs a positive divisor");
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace kpvc
