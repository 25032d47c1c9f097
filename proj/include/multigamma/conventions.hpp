#pragma once

/**
 * @file conventions.hpp
 * @brief Sign and shift choices left open by the printed multiplication
 * formula and the R_r normalisation, plus the evidence that fixed them.
 *
 *   s_phi      orientation of the zeta'(-j) bracket in phi_r
 *   sigma_phi  inner shift in G_{r,j}((z + q_1 + ... + q_r)/p + sigma_phi)
 *   s_R        orientation of the R_r exponent in G_r = R_r * Gamma_r^{(-1)^{r-1}}
 *
 * A set is usable only once resolved, either by calibration or explicitly.
 */

#include "multigamma/errors.hpp"
#include "multigamma/rational.hpp"

#include <string>
#include <vector>

namespace multigamma {

enum class ConventionStatus { unresolved, resolved };

struct ConventionEvidence {
  std::string check;  // e.g. "mult r=2 p=2 z=5/2"
  int s_phi = 0;
  Rational sigma_phi;
  int s_R = 0;
  double residual = 0;
  bool pass = false;
};

struct ConventionSet {
  int s_phi = 0;
  Rational sigma_phi = 0;
  int s_R = 0;
  ConventionStatus status = ConventionStatus::unresolved;
  std::vector<ConventionEvidence> evidence;

  static ConventionSet resolved_with(int s_phi, const Rational& sigma_phi, int s_R) {
    if ((s_phi != 1 && s_phi != -1) || (s_R != 1 && s_R != -1))
      throw std::invalid_argument("convention signs must be +1 or -1");
    ConventionSet c;
    c.s_phi = s_phi;
    c.sigma_phi = sigma_phi;
    c.s_R = s_R;
    c.status = ConventionStatus::resolved;
    return c;
  }

  bool resolved() const { return status == ConventionStatus::resolved; }

  void require_resolved() const {
    if (!resolved()) throw ConventionError("conventions are unresolved; run calibration or supply them explicitly");
  }

  friend bool operator==(const ConventionSet& a, const ConventionSet& b) {
    return a.status == b.status && a.s_phi == b.s_phi && a.sigma_phi == b.sigma_phi && a.s_R == b.s_R;
  }
};

}  // namespace multigamma
