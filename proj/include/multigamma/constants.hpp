#pragma once

/**
 * @file constants.hpp
 * @brief Hurwitz zeta, its s-derivative, and the constants zeta'(-j).
 *
 * Both functions use the Euler-Maclaurin continuation
 *
 *   zeta(s, a) = sum_{n<M} (n+a)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
 *              + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1},   x = M + a,
 *
 * and the derivative differentiates it term by term, so no finite
 * differencing is involved. M and K are planned from the size of the first
 * omitted correction term.
 */

#include "multigamma/exact_poly.hpp"
#include "multigamma/precision.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace multigamma {

struct EulerMaclaurinPlan {
  std::size_t cutoff = 0;  // M
  std::size_t order = 0;   // K
};

namespace detail {

// log10 of an upper estimate for the k-th correction term (value or derivative).
inline double em_term_log10(double s, double x, std::size_t k, bool derivative) {
  constexpr double log10_two_pi = 0.79817986835811504;  // log10(2 pi)
  double lt = std::log10(2.0 * 1.6449340668482264) - 2.0 * static_cast<double>(k) * log10_two_pi;
  for (std::size_t i = 0; i + 2 <= 2 * k; ++i) lt += std::log10(std::max(std::fabs(s + static_cast<double>(i)), 1.0));
  lt -= (s + 2.0 * static_cast<double>(k) - 1.0) * std::log10(x);
  if (derivative) lt += std::log10(2.0 * static_cast<double>(k) + std::fabs(std::log(x)) + 1.0);
  return lt;
}

inline constexpr std::size_t kMaxEulerMaclaurinOrder = 100;  // keeps Bernoulli indices <= 200

}  // namespace detail

/// Smallest K (at the smallest workable M) whose first omitted term is below 10^-digits.
inline EulerMaclaurinPlan plan_euler_maclaurin(double s, double a, unsigned digits, bool derivative) {
  const double target = -static_cast<double>(digits);
  std::size_t cutoff = std::max<std::size_t>({8, static_cast<std::size_t>(digits / 2),
                                              static_cast<std::size_t>(std::ceil(std::fabs(s))) + 2});
  for (int attempt = 0; attempt < 40; ++attempt, cutoff *= 2) {
    const double x = static_cast<double>(cutoff) + a;
    double previous = detail::em_term_log10(s, x, 1, derivative);
    for (std::size_t k = 1; k <= detail::kMaxEulerMaclaurinOrder; ++k) {
      const double next = detail::em_term_log10(s, x, k + 1, derivative);
      if (next < target) return {cutoff, k};
      if (next > previous) break;  // asymptotic series turned; need a larger cutoff
      previous = next;
    }
  }
  throw DomainError("no Euler-Maclaurin plan reaches the requested precision");
}

namespace detail {

template <class Real>
struct ZetaPair {
  Real value;
  Real sderiv;
};

template <class Real>
ZetaPair<Real> euler_maclaurin(const Real& s, const Real& a, const EulerMaclaurinPlan& plan) {
  using std::exp;
  using std::log;
  if (s == 1) throw DomainError("Hurwitz zeta has a pole at s = 1");
  if (!(a > 0)) throw DomainError("Hurwitz zeta requires a > 0");

  Real value = 0, sderiv = 0;
  for (std::size_t n = 0; n < plan.cutoff; ++n) {
    const Real x = Real(n) + a;
    const Real lx = log(x);
    const Real t = exp(-s * lx);
    value += t;
    sderiv -= lx * t;
  }

  const Real x = Real(plan.cutoff) + a;
  const Real lx = log(x);
  const Real xs = exp(-s * lx);  // x^{-s}
  const Real sm1 = s - 1;
  value += x * xs / sm1 + xs / 2;
  sderiv += x * xs * (-lx / sm1 - 1 / (sm1 * sm1)) - lx * xs / 2;

  const auto b = bernoulli_numbers(2 * plan.order);
  Real poch = s, poch_d = 1;  // (s)_{2k-1} and its s-derivative, k = 1
  Real xpow = xs / x;         // x^{-s-2k+1}
  Real fact = 2;              // (2k)!
  for (std::size_t k = 1; k <= plan.order; ++k) {
    const Real coeff = to_real<Real>(b[2 * k]) / fact;
    value += coeff * poch * xpow;
    sderiv += coeff * (poch_d - lx * poch) * xpow;
    // advance to k + 1: multiply by (s + 2k - 1)(s + 2k)
    for (std::size_t i = 2 * k - 1; i <= 2 * k; ++i) {
      const Real f = s + Real(i);
      poch_d = poch_d * f + poch;
      poch = poch * f;
    }
    xpow /= x * x;
    fact *= Real((2 * k + 1) * (2 * k + 2));
  }
  return {checked(value, "hurwitz_zeta"), checked(sderiv, "hurwitz_zeta_sderiv")};
}

template <class Real>
EulerMaclaurinPlan resolve_plan(const Real& s, const Real& a, const Precision& prec, bool derivative,
                                const std::optional<EulerMaclaurinPlan>& plan) {
  require_capacity<Real>(prec);
  if (plan) return *plan;
  return plan_euler_maclaurin(static_cast<double>(s), static_cast<double>(a), prec.working(), derivative);
}

}  // namespace detail

/// zeta(s, a) = sum_{n>=0} (n+a)^{-s}, continued to s != 1.
template <class Real>
Real hurwitz_zeta(const Real& s, const Real& a, const Precision& prec = {},
                  std::optional<EulerMaclaurinPlan> plan = std::nullopt) {
  return detail::euler_maclaurin(s, a, detail::resolve_plan(s, a, prec, false, plan)).value;
}

/// d/ds zeta(s, a), by term-wise differentiation of the Euler-Maclaurin form.
template <class Real>
Real hurwitz_zeta_sderiv(const Real& s, const Real& a, const Precision& prec = {},
                         std::optional<EulerMaclaurinPlan> plan = std::nullopt) {
  return detail::euler_maclaurin(s, a, detail::resolve_plan(s, a, prec, true, plan)).sderiv;
}

template <class Real>
Real riemann_zeta(const Real& s, const Precision& prec = {}) {
  return hurwitz_zeta(s, Real(1), prec);
}

/// zeta'(-j), memoised per (j, working digits).
template <class Real>
Real zeta_prime_neg(unsigned j, const Precision& prec = {}) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, Real> cache;
  const auto key = std::make_pair(j, prec.working());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Real v = hurwitz_zeta_sderiv(-Real(j), Real(1), prec);
  std::lock_guard lock(mutex);
  return cache.emplace(key, v).first->second;
}

/// zeta'(0), ..., zeta'(-(count-1))
template <class Real>
std::vector<Real> zeta_prime_neg_table(unsigned count, const Precision& prec = {}) {
  std::vector<Real> out;
  out.reserve(count);
  for (unsigned j = 0; j < count; ++j) out.push_back(zeta_prime_neg<Real>(j, prec));
  return out;
}

}  // namespace multigamma
