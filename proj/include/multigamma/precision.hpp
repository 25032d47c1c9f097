#pragma once

/**
 * @file precision.hpp
 * @brief Requested precision and the fixed-precision MPFR types used to meet it.
 *
 * Each numeric routine is a template over Real. Precision carries the
 * requested decimal digits (plus guard digits); the Real type must hold at
 * least that many. Static-precision MPFR numbers keep evaluations free of
 * shared global state.
 */

#include "multigamma/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace multigamma {

template <unsigned Digits10>
using mp_real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits10>,
                                              boost::multiprecision::et_off>;

using real50 = mp_real<50>;
using real100 = mp_real<100>;

struct Precision {
  unsigned digits = 30;
  unsigned guard = 10;

  unsigned working() const { return digits + guard; }

  void validate() const {
    if (digits < 10) throw std::invalid_argument("precision must request at least 10 digits");
    if (guard < 10) throw std::invalid_argument("precision needs at least 10 guard digits");
  }
};

template <class Real>
constexpr unsigned real_digits10() {
  return static_cast<unsigned>(std::numeric_limits<Real>::digits10);
}

/// Throws when Real cannot carry the requested working precision.
template <class Real>
void require_capacity(const Precision& prec) {
  prec.validate();
  if constexpr (!std::is_floating_point_v<Real>) {
    if (prec.working() > real_digits10<Real>())
      throw std::invalid_argument("working precision " + std::to_string(prec.working()) +
                                  " exceeds the numeric type's " + std::to_string(real_digits10<Real>()) +
                                  " digits");
  }
}

/// 10^-digits in Real.
template <class Real>
Real pow10_neg(unsigned digits) {
  using std::pow;
  return pow(Real(10), -static_cast<int>(digits));
}

template <class Real>
Real checked(const Real& x, const char* what) {
  using std::isfinite;
  using boost::multiprecision::isfinite;
  if (!isfinite(x)) throw NonFiniteError(std::string("non-finite value in ") + what);
  return x;
}

}  // namespace multigamma
