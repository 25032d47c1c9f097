#pragma once

/**
 * @file rational_poly.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * coeffs()[i] is the coefficient of z^i. The zero polynomial is the empty
 * sequence; every other value has a nonzero leading coefficient.
 */

#include "multigamma/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace multigamma {

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPoly constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }
  static RationalPoly identity() { return RationalPoly({Rational(0), Rational(1)}); }
  /// scale * z + shift
  static RationalPoly affine(const Rational& scale, const Rational& shift) { return RationalPoly({shift, scale}); }
  static RationalPoly monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RationalPoly(std::move(v));
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rational operator()(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  /// Horner evaluation in a numeric type; coefficients are rounded into Real once each.
  template <class Real, class T>
  T evaluate(const T& z) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + T(to_real<Real>(*it));
    return acc;
  }

  /// p(inner(z)), exact.
  RationalPoly compose(const RationalPoly& inner) const {
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
  }

  /// p(scale * z + shift)
  RationalPoly compose_affine(const Rational& scale, const Rational& shift) const {
    return compose(affine(scale, shift));
  }

  /// p(z + h)
  RationalPoly shifted(const Rational& h) const { return compose_affine(Rational(1), h); }

  RationalPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(d));
  }

  /// Antiderivative with zero constant term.
  RationalPoly antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    return RationalPoly(std::move(a));
  }

  RationalPoly operator-() const {
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return RationalPoly(std::move(c));
  }

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const Rational& s, const RationalPoly& p) {
    if (s == 0) return {};
    auto c = p.coeffs_;
    for (auto& x : c) x *= s;
    return RationalPoly(std::move(c));
  }
  friend RationalPoly operator*(const RationalPoly& p, const Rational& s) { return s * p; }
  friend RationalPoly operator/(const RationalPoly& p, const Rational& s) { return (Rational(1) / s) * p; }

  RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
  RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
  RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'z') const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      Rational mag = c < 0 ? Rational(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      bool unit = (mag == 1) && k > 0;
      if (!unit) out += multigamma::to_string(mag);
      if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace multigamma
