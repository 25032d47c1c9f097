#pragma once

// Reference values computed without the library's evaluators.

#include "multigamma/precision.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <vector>

namespace multigamma::testing {

// log Gamma(z) from the classical product n! n^z / (z (z+1) ... (z+n)),
// n = 2^8 .. 2^16, Richardson in 1/n (the error has no log terms).
template <class Real>
Real classical_log_gamma(const Real& z) {
  using std::log;
  std::vector<Real> t;
  Real log_fact = 0, sum_shifted = log(z);
  unsigned long k = 1;
  for (unsigned e = 8; e <= 16; ++e) {
    const unsigned long n = 1UL << e;
    for (; k <= n; ++k) {
      log_fact += log(Real(k));
      sum_shifted += log(z + Real(k));
    }
    t.push_back(log_fact + z * log(Real(n)) - sum_shifted);
  }
  for (std::size_t level = 1; level < t.size(); ++level) {
    const Real factor = pow(Real(2), static_cast<int>(level));
    for (std::size_t i = t.size() - 1; i >= level; --i) t[i] = (factor * t[i] - t[i - 1]) / (factor - 1);
  }
  return t.back();
}

template <class Real>
Real lgamma_reference(const Real& z) {
  return boost::math::lgamma(z);
}

// log G_2(n) = sum_{k=1}^{n-2} log k!
template <class Real>
Real log_barnes_g_integer(unsigned n) {
  using std::log;
  Real sum = 0, log_fact = 0;
  for (unsigned k = 1; k + 2 <= n; ++k) {
    log_fact += log(Real(k));
    sum += log_fact;
  }
  return sum;
}

// log G_3(n) = sum_{m=1}^{n-1} log G_2(m)
template <class Real>
Real log_g3_integer(unsigned n) {
  Real sum = 0;
  for (unsigned m = 1; m + 1 <= n; ++m) sum += log_barnes_g_integer<Real>(m);
  return sum;
}

}  // namespace multigamma::testing
