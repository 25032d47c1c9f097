#pragma once

/**
 * @file evaluate.hpp
 * @brief log G_r(z), log Gamma_r(z) and the multiple sine.
 *
 * log_multigamma(r, z) is log G_r(z). The product and asymptotic routes work
 * with log G_r(w+1), so they are called at w = z - 1.
 */

#include "multigamma/asymptotic.hpp"
#include "multigamma/constants.hpp"
#include "multigamma/exact_poly.hpp"
#include "multigamma/log_value.hpp"
#include "multigamma/products.hpp"

#include <sstream>
#include <string>

namespace multigamma {

template <class Real>
LogValue<Real> log_g0(const Complex<Real>& z) {
  if (z.re == 0 && z.im == 0) throw SingularInput("singular lattice point z = 0");
  return {log(z), Method::exact, Real(0), std::nullopt};
}

template <class Real>
LogValue<Real> log_multigamma(unsigned r, const Complex<Real>& z, const EvalConfig& cfg) {
  cfg.validate();
  require_capacity<Real>(cfg.precision);
  if (r == 0) {
    reject_lattice(z);
    return log_g0(z);
  }
  reject_lattice(z);
  const Complex<Real> w = z - Complex<Real>(Real(1));
  LogValue<Real> gauss = log_multigamma_gauss(r, w, cfg);
  if (!cfg.cross_validate) return gauss;

  LogValue<Real> asym = log_multigamma_asymptotic(r, w, cfg);
  const Real discrepancy = abs(gauss.value - asym.value);
  if (discrepancy > Real(100 * cfg.tolerance)) {
    std::ostringstream os;
    os << "product and asymptotic routes disagree by " << static_cast<double>(discrepancy) << " at r = " << r;
    throw CrossValidationError(os.str());
  }
  LogValue<Real> chosen = gauss.err_est <= asym.err_est ? gauss : asym;
  chosen.discrepancy = discrepancy;
  return chosen;
}

/// sum_j G_{r,j}(z-1) zeta'(-j), the exponent of R_r up to orientation.
template <class Real>
Complex<Real> r_exponent(unsigned r, const Complex<Real>& z, const Precision& prec) {
  const auto g = grj_row(r);
  Complex<Real> sum;
  for (unsigned j = 0; j < r; ++j) sum += g[j].shifted(-1).evaluate<Real>(z) * zeta_prime_neg<Real>(j, prec);
  return sum;
}

namespace detail {

// (-1)^{r-1} [log G_r(z) - s_R * r_exponent]
template <class Real>
LogValue<Real> gamma_r_from(unsigned r, const Complex<Real>& z, const LogValue<Real>& log_g, int s_R,
                            const Precision& prec) {
  Complex<Real> v = log_g.value - Real(s_R) * r_exponent(r, z, prec);
  if (r % 2 == 0) v = -v;
  return {v, log_g.method, log_g.err_est, log_g.discrepancy};
}

}  // namespace detail

template <class Real>
LogValue<Real> log_gamma_r(unsigned r, const Complex<Real>& z, const EvalConfig& cfg) {
  if (r < 1) throw std::invalid_argument("log_gamma_r requires r >= 1");
  cfg.conventions.require_resolved();
  return detail::gamma_r_from(r, z, log_multigamma(r, z, cfg), cfg.conventions.s_R, cfg.precision);
}

/// log S_r(z) = log Gamma_r(r - z) + (-1)^{r+1} log Gamma_r(z)
template <class Real>
LogValue<Real> log_multiple_sine(unsigned r, const Complex<Real>& z, const EvalConfig& cfg) {
  const auto a = log_gamma_r(r, Complex<Real>(Real(r)) - z, cfg);
  const auto b = log_gamma_r(r, z, cfg);
  const Complex<Real> v = r % 2 == 1 ? a.value + b.value : a.value - b.value;
  return {v, a.method, a.err_est + b.err_est, std::nullopt};
}

template <class Real>
Complex<Real> multiple_sine(unsigned r, const Complex<Real>& z, const EvalConfig& cfg) {
  return checked(exp(log_multiple_sine(r, z, cfg).value), "multiple_sine");
}

}  // namespace multigamma
