#pragma once

/**
 * @file extrapolate.hpp
 * @brief Richardson extrapolation to step 0 (Neville's scheme).
 *
 * Given values v_i at steps h_i with v(h) = v0 + c1 h + c2 h^2 + ..., the
 * interpolating polynomial through (h_i, v_i) evaluated at h = 0 removes the
 * leading terms. Steps may be complex.
 */

#include "multigamma/errors.hpp"
#include "multigamma/log_value.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace multigamma {

template <class Scalar, class Real>
struct Extrapolant {
  Scalar value;
  Real error;  // |T(n-1, order) - T(n-2, order)|, or the last column step when that is unavailable
};

template <class Real, class Scalar, class Step>
Extrapolant<Scalar, Real> richardson(std::span<const Scalar> values, std::span<const Step> steps, unsigned order) {
  const std::size_t n = values.size();
  if (steps.size() != n) throw std::invalid_argument("richardson: values and steps differ in length");
  if (n < order + 1) throw DomainError("richardson: need at least order + 1 entries");
  using std::abs;
  // table[i] holds T(i, k) for the current column k
  std::vector<Scalar> column(values.begin(), values.end()), previous_column = column;
  for (unsigned k = 1; k <= order; ++k) {
    previous_column = column;
    for (std::size_t i = n; i-- > k;) {
      const Step ratio = steps[i] / (steps[i - k] - steps[i]);
      column[i] = previous_column[i] + (previous_column[i] - previous_column[i - 1]) * ratio;
    }
  }
  Real error = 0;
  if (n >= order + 2) error = abs(column[n - 1] - column[n - 2]);
  else if (order >= 1) error = abs(column[n - 1] - previous_column[n - 1]);
  return {column[n - 1], error};
}

namespace detail {

// Solves A x = b by Gaussian elimination with partial pivoting; A real, b complex.
template <class Real>
std::vector<Complex<Real>> solve_dense(std::vector<std::vector<Real>> a, std::vector<Complex<Real>> b) {
  using std::abs;
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (abs(a[row][col]) > abs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0) throw DomainError("singular extrapolation system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Real f = a[row][col] / a[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Complex<Real>> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex<Real> acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

// Constant term of the model v + sum_{m=1}^{poly} a_m (N/N_ref)^m + sum_{j=1}^{order} c_j (N_ref/N)^j
// through points [first, first + poly + order + 1).
template <class Real>
Complex<Real> fit_constant(std::span<const Complex<Real>> values, std::span<const std::size_t> ladder,
                           std::size_t first, unsigned poly, unsigned order) {
  const std::size_t u = 1 + poly + order;
  const Real ref = Real(ladder[first + u - 1]);
  std::vector<std::vector<Real>> a(u, std::vector<Real>(u));
  std::vector<Complex<Real>> b(u);
  for (std::size_t i = 0; i < u; ++i) {
    const Real t = Real(ladder[first + i]) / ref;
    std::size_t col = 0;
    a[i][col++] = 1;
    Real pw = 1;
    for (unsigned m = 1; m <= poly; ++m) a[i][col++] = pw *= t;
    pw = 1;
    for (unsigned j = 1; j <= order; ++j) a[i][col++] = pw /= t;
    b[i] = values[first + i];
  }
  return solve_dense(std::move(a), std::move(b))[0];
}

}  // namespace detail

/**
 * Limit of partial sums P(N) = v + (polynomial in N of degree <= poly, no
 * constant term) + (power series in 1/N), from the last poly + order + 1
 * ladder points. The error estimate compares with the fit one point earlier,
 * or with one order fewer when no earlier point is available.
 */
template <class Real>
Extrapolant<Complex<Real>, Real> fit_limit(std::span<const Complex<Real>> values, std::span<const std::size_t> ladder,
                                           unsigned poly, unsigned order) {
  const std::size_t n = values.size();
  const std::size_t u = 1 + poly + order;
  if (ladder.size() != n) throw std::invalid_argument("fit_limit: values and ladder differ in length");
  if (n < u) throw DomainError("fit_limit: need at least poly + order + 1 entries");
  const Complex<Real> value = detail::fit_constant(values, ladder, n - u, poly, order);
  Real error = 0;
  if (n >= u + 1) error = abs(value - detail::fit_constant(values, ladder, n - u - 1, poly, order));
  else if (order >= 1) error = abs(value - detail::fit_constant(values, ladder, n - u + 1, poly, order - 1));
  return {value, error};
}

/// Extrapolates partial logs computed at N = ladder[i] (steps 1/N) to N -> infinity.
template <class Real>
LogValue<Real> extrapolate(std::span<const LogValue<Real>> seq, std::span<const std::size_t> ladder, unsigned order) {
  if (seq.empty()) throw DomainError("extrapolate: empty sequence");
  for (const auto& v : seq)
    if (v.method != seq.front().method) throw std::invalid_argument("extrapolate: mixed method tags");
  std::vector<Complex<Real>> values;
  std::vector<Real> steps;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    values.push_back(seq[i].value);
    steps.push_back(Real(1) / Real(ladder[i]));
  }
  const auto e = richardson<Real>(std::span<const Complex<Real>>(values), std::span<const Real>(steps), order);
  return {e.value, seq.front().method, e.error, std::nullopt};
}

/// Same, for a ladder N, 2N, 4N, ...
template <class Real>
LogValue<Real> extrapolate(std::span<const LogValue<Real>> seq, unsigned order) {
  std::vector<std::size_t> ladder;
  for (std::size_t i = 0, n = 1; i < seq.size(); ++i, n *= 2) ladder.push_back(n);
  return extrapolate(seq, std::span<const std::size_t>(ladder), order);
}

}  // namespace multigamma
