#pragma once

#include "multigamma/conventions.hpp"
#include "multigamma/precision.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace multigamma {

struct EvalConfig {
  Precision precision;
  /// Minimum |z + M| at which the asymptotic expansion is applied.
  double shift_radius = 20;
  /// Largest N of the product ladder, which runs from ladder_base in half-octave steps.
  std::size_t truncation = std::size_t{1} << 14;
  std::size_t ladder_base = std::size_t{1} << 6;
  unsigned extrapolation_order = 4;
  double tolerance = 1e-8;
  /// Evaluate both the product and asymptotic routes and compare them.
  bool cross_validate = false;
  ConventionSet conventions;

  void validate() const {
    precision.validate();
    if (shift_radius < 10) throw std::invalid_argument("shift_radius must be >= 10");
    if (extrapolation_order > 8) throw std::invalid_argument("extrapolation_order must be <= 8");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (ladder_base < 1 || truncation < ladder_base) throw std::invalid_argument("truncation below ladder base");
    if (ladder().size() < extrapolation_order + 2)
      throw std::invalid_argument("product ladder too short for the extrapolation order");
  }

  /// ladder_base * 2^(i/2), rounded, up to truncation
  std::vector<std::size_t> ladder() const {
    std::vector<std::size_t> out;
    for (unsigned i = 0;; ++i) {
      const double n = std::round(static_cast<double>(ladder_base) * std::exp2(0.5 * i));
      if (n > static_cast<double>(truncation)) break;
      const auto v = static_cast<std::size_t>(n);
      if (out.empty() || v > out.back()) out.push_back(v);
    }
    return out;
  }
};

}  // namespace multigamma
