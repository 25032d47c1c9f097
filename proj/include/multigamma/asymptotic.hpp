#pragma once

/**
 * @file asymptotic.hpp
 * @brief Large-argument expansion of log G_r(x+1) and the shifted evaluation route.
 *
 *   log G_r(x+1) ~ [binom(x+1, r) + sum_j B_{j+1}/(j+1) G_{r,j}(x)] log(x+1)
 *                - sum_j G_{r,j}(x) (x+1)^{j+1} / (j+1)^2
 *                - sum_j G_{r,j}(x) zeta'(-j)                       + O(1/x),
 *
 * with j = 0..r-1. Small arguments are shifted to |x + M| >= radius and
 * brought back with L_k(y) = L_k(y+1) - L_{k-1}(y). The O(1/x) remainder at
 * level r, multiplied through the descent, leaves an O(1) error at the
 * bottom for r >= 2, so by default the shifted values for a ladder of shifts
 * are extrapolated in h = 1/(x + M) and the lower levels come from the same
 * route one level down. With extrapolation_order = 0 the single shifted
 * value is returned together with its propagated error.
 */

#include "multigamma/constants.hpp"
#include "multigamma/eval_config.hpp"
#include "multigamma/exact_poly.hpp"
#include "multigamma/extrapolate.hpp"
#include "multigamma/log_value.hpp"
#include "multigamma/products.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace multigamma {

/// Exact polynomial coefficients of the expansion.
struct HsCoefficients {
  RationalPoly log_coeff;                 // multiplies log(x+1)
  RationalPoly power_part;                // subtracted
  std::vector<RationalPoly> zeta_coeffs;  // zeta_coeffs[j] multiplies -zeta'(-j)
};

inline HsCoefficients hs_coefficients(unsigned r) {
  HsCoefficients c;
  c.log_coeff = binom_poly(r).shifted(1);
  const auto b = bernoulli_numbers(r + 1);
  const auto g = grj_row(r);
  const RationalPoly x_plus_one = RationalPoly::affine(1, 1);
  RationalPoly power = RationalPoly::constant(1);
  for (unsigned j = 0; j < r; ++j) {
    power *= x_plus_one;
    const Rational jj(j + 1);
    c.log_coeff += (b[j + 1] / jj) * g[j];
    c.power_part += (Rational(1) / (jj * jj)) * (g[j] * power);
    c.zeta_coeffs.push_back(g[j]);
  }
  return c;
}

namespace detail {

inline const HsCoefficients& cached_hs_coefficients(unsigned r) {
  static std::mutex mutex;
  static std::map<unsigned, HsCoefficients> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, hs_coefficients(r)).first;
  return it->second;
}

}  // namespace detail

/// The expansion itself (no remainder term); needs Re(x) > 0.
template <class Real>
Complex<Real> hs_expansion(unsigned r, const Complex<Real>& x, const Precision& prec) {
  if (!(x.re > 0)) throw DomainError("asymptotic expansion needs Re(x) > 0");
  const Complex<Real> x1 = x + Complex<Real>(Real(1));
  if (r == 0) return log(x1);
  const auto& c = detail::cached_hs_coefficients(r);
  Complex<Real> out = c.log_coeff.evaluate<Real>(x) * log(x1) - c.power_part.evaluate<Real>(x);
  for (unsigned j = 0; j < r; ++j)
    out -= c.zeta_coeffs[j].evaluate<Real>(x) * zeta_prime_neg<Real>(j, prec);
  return checked(out, "asymptotic expansion");
}

/// |hs(x) - log G_r(x+1)| ~ C / |x|^exponent, fitted at x = 20, 40, 80 against the Gauss product.
struct RemainderModel {
  double constant = 0;
  double exponent = 1;
  std::array<double, 3> abscissae{20, 40, 80};
  std::array<double, 3> errors{};
};

template <class Real>
RemainderModel fit_remainder_model(unsigned r, const EvalConfig& cfg) {
  RemainderModel m;
  if (r == 0) return m;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Complex<Real> x(Real(m.abscissae[i]));
    const auto exact = log_multigamma_gauss(r, x, cfg).value;
    m.errors[i] = static_cast<double>(abs(hs_expansion(r, x, cfg.precision) - exact));
    const double lx = std::log(m.abscissae[i]), ly = std::log(m.errors[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
  m.exponent = -slope;
  double log_c = 0;
  for (std::size_t i = 0; i < 3; ++i) log_c += std::log(m.errors[i] * m.abscissae[i]);
  m.constant = std::exp(log_c / 3);  // C in C/|x|, geometric mean over the fit points
  return m;
}

namespace detail {

template <class Real>
const RemainderModel& cached_remainder_model(unsigned r, const EvalConfig& cfg) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, RemainderModel> cache;
  const auto key = std::make_pair(r, cfg.precision.working());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const RemainderModel m = fit_remainder_model<Real>(r, cfg);
  std::lock_guard lock(mutex);
  return cache.emplace(key, m).first->second;
}

// One evaluation of the asymptotic route at base point w. Values at w + offset
// are memoised, since the shift ladders of different levels overlap.
template <class Real>
class AsymptoticRoute {
 public:
  AsymptoticRoute(const Complex<Real>& w, const EvalConfig& cfg) : w_(w), cfg_(cfg) {}

  // L_k(w + offset + 1), k = 0..r, with error estimates.
  std::vector<LogValue<Real>> hierarchy(unsigned r, long offset, unsigned order) {
    const auto key = std::make_tuple(r, offset, order);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    auto out = compute(r, offset, order);
    memo_.emplace(key, out);
    return out;
  }

 private:
  Complex<Real> point(long offset) const { return w_ + Complex<Real>(Real(offset)); }

  const Complex<Real>& log_at(long offset) {
    auto it = logs_.find(offset);
    if (it == logs_.end()) it = logs_.emplace(offset, log(point(offset))).first;
    return it->second;
  }

  long base_shift(long offset) const {
    const Real radius(cfg_.shift_radius);
    long m = 0;
    while (abs(point(offset + m)) < radius || !(point(offset + m).re > 0)) ++m;
    return m;
  }

  // From L_k(w + top + 1) for k < levels.size() down to L_k(w + offset + 1); errors ride along.
  void descend(std::vector<LogValue<Real>>& levels, long top, long offset) {
    for (long m = top; m > offset; --m) {
      levels[0].value = log_at(m);  // levels now hold L_k(w + m)
      for (std::size_t k = 1; k < levels.size(); ++k) {
        levels[k].value -= levels[k - 1].value;
        levels[k].err_est += levels[k - 1].err_est;
      }
    }
  }

  std::vector<LogValue<Real>> at_shift(unsigned r, long offset, long shift, unsigned order, Real top_error) {
    std::vector<LogValue<Real>> levels = r == 0 ? std::vector<LogValue<Real>>{}
                                                : hierarchy(r - 1, offset + shift, order == 0 ? 0 : lower_order(order));
    if (r == 0) levels.push_back({log_at(offset + shift + 1), Method::exact, Real(0), std::nullopt});
    const Complex<Real> top = hs_expansion(r, point(offset + shift), cfg_.precision);
    levels.push_back({top, Method::asymptotic, top_error, std::nullopt});
    descend(levels, offset + shift, offset);
    return levels;
  }

  unsigned lower_order(unsigned order) const { return std::min(8u, order + 2); }

  std::vector<LogValue<Real>> compute(unsigned r, long offset, unsigned order) {
    if (r == 0) return {{log_at(offset + 1), Method::exact, Real(0), std::nullopt}};
    const long m0 = base_shift(offset);
    if (order == 0) {
      const auto& model = cached_remainder_model<Real>(r, cfg_);
      const Real top_error = Real(model.constant) / abs(point(offset + m0));
      return at_shift(r, offset, m0, 0, top_error);
    }
    const long stride = static_cast<long>(std::ceil(cfg_.shift_radius));
    std::vector<Complex<Real>> tops, steps;
    std::vector<LogValue<Real>> first;
    for (unsigned j = 0; j < order + 2; ++j) {
      const long shift = m0 + stride * ((1L << j) - 1);
      auto levels = at_shift(r, offset, shift, order, Real(0));
      tops.push_back(levels[r].value);
      steps.push_back(Complex<Real>(Real(1)) / point(offset + shift));
      if (j == 0) first = std::move(levels);
    }
    const auto e = richardson<Real>(std::span<const Complex<Real>>(tops), std::span<const Complex<Real>>(steps), order);
    first[r].value = e.value;
    first[r].err_est += e.error;
    first[r].method = Method::asymptotic;
    return first;
  }

  Complex<Real> w_;
  const EvalConfig& cfg_;
  std::map<std::tuple<unsigned, long, unsigned>, std::vector<LogValue<Real>>> memo_;
  std::unordered_map<long, Complex<Real>> logs_;
};

}  // namespace detail

/// log G_k(w+1), k = 0..r, by the asymptotic route.
template <class Real>
std::vector<LogValue<Real>> asymptotic_hierarchy(unsigned r, const Complex<Real>& w, const EvalConfig& cfg) {
  cfg.validate();
  require_capacity<Real>(cfg.precision);
  detail::require_product_domain(w);
  detail::AsymptoticRoute<Real> route(w, cfg);
  return route.hierarchy(r, 0, cfg.extrapolation_order);
}

/// log G_r(w+1) by the asymptotic route.
template <class Real>
LogValue<Real> log_multigamma_asymptotic(unsigned r, const Complex<Real>& w, const EvalConfig& cfg) {
  return asymptotic_hierarchy(r, w, cfg).back();
}

}  // namespace multigamma
