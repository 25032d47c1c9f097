#pragma once

/**
 * @file rational.hpp
 * @brief Exact coefficient domain: GMP-backed big integers and fractions.
 *
 * mpq_rational keeps every value canonical (lowest terms, positive
 * denominator, zero as 0/1), so equality on Rational is structural.
 */

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <type_traits>
#include <string>
#include <string_view>

namespace multigamma {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Parses "n", "n/d", "-1.25" or "2.5e-3" into an exact fraction.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rational(n, d);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(s.substr(e + 1));
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string digits;
  bool seen_dot = false;
  for (char c : s) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("malformed number: " + std::string(text));
    digits.push_back(c);
    if (seen_dot) --exponent;
  }
  if (digits.empty()) throw std::invalid_argument("malformed number: " + std::string(text));
  const auto nonzero = digits.find_first_not_of('0');
  digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);  // a leading 0 would parse as octal
  Rational value{BigInt(digits)};
  BigInt ten_power = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  value = exponent < 0 ? value / Rational(ten_power) : value * Rational(ten_power);
  return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& q) {
  if (denominator_of(q) == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Exact conversion of a fraction into a floating type (rounded once per component).
template <class Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<Real>) {
    return q.template convert_to<Real>();
  } else {
    return Real(numerator_of(q)) / Real(denominator_of(q));
  }
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace multigamma
