#pragma once

/**
 * @file log_value.hpp
 * @brief Logarithms of multiple gamma values together with their provenance.
 *
 * Values are accumulated additively from principal logs of individual
 * factors, so the imaginary part follows the construction path and is not
 * reduced mod 2 pi.
 */

#include "multigamma/complex.hpp"
#include "multigamma/eval_config.hpp"

#include <optional>
#include <string>

namespace multigamma {

enum class Method { exact, gauss, euler, asymptotic, oracle };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::gauss: return "gauss";
    case Method::euler: return "euler";
    case Method::asymptotic: return "asymptotic";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

template <class Real>
struct LogValue {
  Complex<Real> value;
  Method method = Method::exact;
  Real err_est{0};
  std::optional<Real> discrepancy;  // |gauss - asymptotic| when cross-validated
};

/// |a - b| / max(1, |a|)
template <class Real>
Real relative_residual(const Complex<Real>& a, const Complex<Real>& b) {
  using std::max;
  const Real scale = max(Real(1), abs(a));
  return abs(a - b) / scale;
}

/// Inputs within this distance of the pole/zero lattice are rejected.
inline constexpr double kLatticeExclusion = 1e-8;

/// Nearest integer n <= 0 when |z - n| < kLatticeExclusion.
template <class Real>
std::optional<long> near_nonpositive_integer(const Complex<Real>& z) {
  using std::abs;
  using std::round;
  if (abs(z.im) >= Real(kLatticeExclusion)) return std::nullopt;
  const Real n = round(z.re);
  if (n > 0 || abs(z.re - n) >= Real(kLatticeExclusion)) return std::nullopt;
  return static_cast<long>(n);
}

template <class Real>
void reject_lattice(const Complex<Real>& z) {
  if (auto n = near_nonpositive_integer(z))
    throw SingularInput("singular lattice point z = " + std::to_string(*n));
}

}  // namespace multigamma
