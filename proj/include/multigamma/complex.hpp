#pragma once

/**
 * @file complex.hpp
 * @brief Minimal complex arithmetic over any Real (double or MPFR).
 *
 * std::complex is only specified for the built-in floating types, so the
 * handful of operations the evaluators need is written out here. log is the
 * principal branch with arg in (-pi, pi]; real positive arguments take a
 * real-only fast path so exact cancellations stay exact.
 */

#include "multigamma/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <ostream>

namespace multigamma {

template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT: implicit lift from the reals
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT

  bool is_real() const { return im == 0; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
  Complex& operator/=(const Complex& o) { return *this = *this / o; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    if (a.im == 0 && b.im == 0) return Complex(a.re * b.re);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator*(const Complex& a, const Real& s) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re / s, a.im / s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    if (b.im == 0) return a / b.re;
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << "(" << z.re << ", " << z.im << ")";
  }
};

template <class Real>
Real abs(const Complex<Real>& z) {
  using std::sqrt;
  using std::abs;
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt(z.re * z.re + z.im * z.im);
}

/// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
template <class Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  if (z.im == 0) return z.re < 0 ? boost::math::constants::pi<Real>() : Real(0);
  return atan2(z.im, z.re);
}

template <class Real>
Complex<Real> log(const Complex<Real>& z) {
  using std::log;
  if (z.im == 0 && z.re > 0) return Complex<Real>(log(z.re));
  return {log(abs(z)), arg(z)};
}

/// log(1 + w) without cancellation for small w.
template <class Real>
Complex<Real> log1p(const Complex<Real>& w) {
  using std::log1p;
  using std::atan2;
  if (w.im == 0 && w.re > -1) return Complex<Real>(log1p(w.re));
  const Real re = log1p(w.re * (2 + w.re) + w.im * w.im) / 2;
  Complex<Real> one_plus(1 + w.re, w.im);
  return {re, arg(one_plus)};
}

template <class Real>
Complex<Real> exp(const Complex<Real>& z) {
  using std::exp;
  using std::cos;
  using std::sin;
  const Real m = exp(z.re);
  if (z.im == 0) return Complex<Real>(m);
  return {m * cos(z.im), m * sin(z.im)};
}

template <class Real>
Complex<Real> checked(const Complex<Real>& z, const char* what) {
  return {checked(z.re, what), checked(z.im, what)};
}

/// binom(z, m) = z (z-1) ... (z-m+1) / m!
template <class Real>
Complex<Real> binom(const Complex<Real>& z, unsigned m) {
  Complex<Real> acc(Real(1));
  for (unsigned i = 0; i < m; ++i) acc = acc * (z - Complex<Real>(Real(i))) / Real(i + 1);
  return acc;
}

}  // namespace multigamma
