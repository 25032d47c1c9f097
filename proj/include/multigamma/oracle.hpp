#pragma once

/**
 * @file oracle.hpp
 * @brief log Gamma_r(z) for real z > 0 through the Barnes zeta function.
 *
 * zeta_r(s, z) = sum_j a_j(z) zeta(s - j, z) exactly (see barnes_decomposition),
 * so log Gamma_r(z) = d/ds zeta_r(s, z) at s = 0 is a finite combination of
 * Hurwitz zeta derivatives. Shares nothing with the product or asymptotic routes
 * beyond the Hurwitz zeta evaluator.
 */

#include "multigamma/constants.hpp"
#include "multigamma/exact_poly.hpp"
#include "multigamma/log_value.hpp"

namespace multigamma {

template <class Real>
LogValue<Real> barnes_zeta_oracle(unsigned r, const Real& z, const Precision& prec) {
  if (r < 1) throw std::invalid_argument("barnes_zeta_oracle requires r >= 1");
  if (!(z > 0)) throw DomainError("barnes_zeta_oracle requires real z > 0");
  require_capacity<Real>(prec);
  const auto a = barnes_decomposition(r);
  Real sum = 0, scale = 0;
  for (unsigned j = 0; j < a.size(); ++j) {
    const Real coeff = a[j].evaluate<Real>(z);
    if (coeff == 0) continue;
    sum += coeff * hurwitz_zeta_sderiv(-Real(j), z, prec);
    scale += abs(coeff);
  }
  using std::max;
  const Real err = pow10_neg<Real>(prec.digits) * max(Real(1), scale);
  return {Complex<Real>(checked(sum, "barnes_zeta_oracle")), Method::oracle, err, std::nullopt};
}

}  // namespace multigamma
