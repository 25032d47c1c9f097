#pragma once

/**
 * @file multiplication.hpp
 * @brief Numeric residual of the multiplication formula
 *
 *   sum_s c_s log G_r((z+s)/p) = phi_r(z) - psi_r(z) log p + log G_r(z),
 *
 * c_s = composition_counts(p, r)[s], phi_r(z) = sum_j phi_rj_poly(r, j, p)(z) zeta'(-j).
 */

#include "multigamma/evaluate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multigamma {

template <class Real>
struct ResidualReport {
  std::string identity;
  unsigned r = 0;
  unsigned p = 0;
  Complex<Real> z;
  Complex<Real> lhs;
  Complex<Real> rhs;
  Real residual{0};
  double tolerance = 0;
  bool pass = false;
};

/// The convention-independent parts; phi is applied per convention set.
template <class Real>
struct MultiplicationTerms {
  unsigned r = 0;
  unsigned p = 0;
  Complex<Real> z;
  Complex<Real> lhs;
  Complex<Real> log_g;
  Complex<Real> psi_log_p;
  std::vector<Real> zeta_primes;
  Precision precision;

  ResidualReport<Real> report(const ConventionSet& conv, double tolerance) const {
    Complex<Real> phi;
    for (unsigned j = 0; j < r; ++j)
      phi += phi_rj_poly(r, j, p, conv).template evaluate<Real>(z) * zeta_primes[j];
    ResidualReport<Real> out;
    out.identity = "multiplication";
    out.r = r;
    out.p = p;
    out.z = z;
    out.lhs = lhs;
    out.rhs = phi - psi_log_p + log_g;
    out.residual = relative_residual(lhs, out.rhs);
    out.tolerance = tolerance;
    out.pass = out.residual < Real(tolerance);
    return out;
  }
};

template <class Real>
MultiplicationTerms<Real> multiplication_terms(unsigned r, unsigned p, const Complex<Real>& z, const EvalConfig& cfg) {
  if (r < 1) throw std::invalid_argument("multiplication residual requires r >= 1");
  if (p < 1) throw std::invalid_argument("multiplication residual requires p >= 1");
  using std::log;
  MultiplicationTerms<Real> t;
  t.r = r;
  t.p = p;
  t.z = z;
  t.precision = cfg.precision;
  const auto counts = composition_counts(p, r);
  const Real inv_p = Real(1) / Real(p);
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const Complex<Real> arg = (z + Complex<Real>(Real(s))) * inv_p;
    t.lhs += to_real<Real>(Rational(counts[s])) * log_multigamma(r, arg, cfg).value;
  }
  t.log_g = log_multigamma(r, z, cfg).value;
  t.psi_log_p = psi_poly(r).evaluate<Real>(z) * log(Real(p));
  t.zeta_primes = zeta_prime_neg_table<Real>(r, cfg.precision);
  return t;
}

template <class Real>
ResidualReport<Real> multiplication_residual(unsigned r, unsigned p, const Complex<Real>& z, const EvalConfig& cfg) {
  cfg.conventions.require_resolved();
  return multiplication_terms(r, p, z, cfg).report(cfg.conventions, cfg.tolerance);
}

}  // namespace multigamma
