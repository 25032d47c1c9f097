#pragma once

/**
 * @file calibration.hpp
 * @brief Numeric arbitration of the three convention choices.
 *
 * Every combination of s_phi in {+1,-1}, sigma_phi in {-1,-2}, s_R in {+1,-1}
 * is scored against
 *   (a) the multiplication formula at r = 1, p in {2, 3}, z in {1, 3/2},
 *   (b) the multiplication formula at r = 2, p = 2, z in {2, 5/2},
 *   (c) log Gamma_1(z) against the Hurwitz zeta route at z in {1, 1/2, 2}.
 * Exactly one combination may pass everything.
 */

#include "multigamma/multiplication.hpp"
#include "multigamma/oracle.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace multigamma {

struct CalibrationCandidate {
  int s_phi;
  Rational sigma_phi;
  int s_R;
};

inline std::vector<CalibrationCandidate> calibration_candidates() {
  std::vector<CalibrationCandidate> out;
  for (int s_phi : {1, -1})
    for (int sigma : {-1, -2})
      for (int s_R : {1, -1}) out.push_back({s_phi, Rational(sigma), s_R});
  return out;
}

/// Rows of the evidence table, one line per (candidate, check).
inline std::string format_evidence(const std::vector<ConventionEvidence>& rows) {
  std::ostringstream os;
  os << "s_phi sigma_phi s_R  check                     residual      pass\n";
  for (const auto& e : rows) {
    char line[160];
    std::snprintf(line, sizeof line, "%+5d %9s %+3d  %-24s  %.6e  %s\n", e.s_phi, to_string(e.sigma_phi).c_str(),
                  e.s_R, e.check.c_str(), e.residual, e.pass ? "yes" : "no");
    os << line;
  }
  return os.str();
}

template <class Real>
ConventionSet calibrate_conventions(const EvalConfig& cfg) {
  cfg.validate();
  struct MultCheck {
    unsigned r, p;
    Rational z;
  };
  const std::vector<MultCheck> mult_checks = {
      {1, 2, Rational(1)}, {1, 2, make_rational(3, 2)}, {1, 3, Rational(1)}, {1, 3, make_rational(3, 2)},
      {2, 2, Rational(2)}, {2, 2, make_rational(5, 2)},
  };
  const std::vector<Rational> lerch_points = {Rational(1), make_rational(1, 2), Rational(2)};

  std::vector<MultiplicationTerms<Real>> terms;
  for (const auto& c : mult_checks)
    terms.push_back(multiplication_terms(c.r, c.p, Complex<Real>(to_real<Real>(c.z)), cfg));
  std::vector<LogValue<Real>> log_gammas, oracles;
  for (const auto& z : lerch_points) {
    log_gammas.push_back(log_multigamma(1, Complex<Real>(to_real<Real>(z)), cfg));
    oracles.push_back(barnes_zeta_oracle(1, to_real<Real>(z), cfg.precision));
  }

  std::vector<ConventionEvidence> evidence;
  std::vector<CalibrationCandidate> survivors;
  for (const auto& cand : calibration_candidates()) {
    const ConventionSet conv = ConventionSet::resolved_with(cand.s_phi, cand.sigma_phi, cand.s_R);
    bool all = true;
    auto record = [&](std::string check, const Real& residual) {
      const bool pass = residual < Real(cfg.tolerance);
      all = all && pass;
      evidence.push_back({std::move(check), cand.s_phi, cand.sigma_phi, cand.s_R, static_cast<double>(residual), pass});
    };
    for (std::size_t i = 0; i < mult_checks.size(); ++i) {
      const auto rep = terms[i].report(conv, cfg.tolerance);
      record("mult r=" + std::to_string(mult_checks[i].r) + " p=" + std::to_string(mult_checks[i].p) +
                 " z=" + to_string(mult_checks[i].z),
             rep.residual);
    }
    for (std::size_t i = 0; i < lerch_points.size(); ++i) {
      const Complex<Real> z(to_real<Real>(lerch_points[i]));
      const auto lg = detail::gamma_r_from(1, z, log_gammas[i], cand.s_R, cfg.precision);
      record("gamma1 z=" + to_string(lerch_points[i]), relative_residual(oracles[i].value, lg.value));
    }
    if (all) survivors.push_back(cand);
  }

  if (survivors.size() != 1) {
    throw CalibrationError(std::to_string(survivors.size()) + " convention sets survive calibration\n" +
                           format_evidence(evidence));
  }
  ConventionSet out = ConventionSet::resolved_with(survivors[0].s_phi, survivors[0].sigma_phi, survivors[0].s_R);
  out.evidence = std::move(evidence);
  return out;
}

}  // namespace multigamma
