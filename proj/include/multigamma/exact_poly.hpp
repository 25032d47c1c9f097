#pragma once

/**
 * @file exact_poly.hpp
 * @brief Exact constructors for the polynomial families attached to the
 * multiple gamma functions.
 *
 * Conventions:
 *  - Bernoulli: t e^{zt} / (e^t - 1) = sum B_n(z) t^n / n!, so B_1 = -1/2.
 *  - Stirling numbers of the first kind are signed:
 *    t (t-1) ... (t-r+1) = sum_j S(r, j) t^j.
 *  - G_{r,j}(z) is the coefficient of u^j in binom(z - u, r - 1);
 *    G_{0,j} = 0 and G_{r,j} = 0 for j >= r.
 */

#include "multigamma/conventions.hpp"
#include "multigamma/rational_poly.hpp"

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace multigamma {

namespace detail {

// Pure memo: B_n depends only on n, so concurrent growth is unobservable.
class BernoulliCache {
 public:
  std::vector<Rational> upto(std::size_t n) {
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_.push_back(Rational(1));
    while (values_.size() <= n) {
      // sum_{k=0}^{m} binom(m+1, k) B_k = 0
      const std::size_t m = values_.size();
      Rational acc = 0;
      BigInt binom = 1;  // binom(m+1, 0)
      for (std::size_t k = 0; k < m; ++k) {
        acc += Rational(binom) * values_[k];
        binom = binom * BigInt(m + 1 - k) / BigInt(k + 1);
      }
      values_.push_back(-acc / Rational(BigInt(m + 1)));
    }
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// B_0 .. B_{n_max} with B_1 = -1/2.
inline std::vector<Rational> bernoulli_numbers(std::size_t n_max) { return detail::bernoulli_cache().upto(n_max); }

inline Rational bernoulli_number(std::size_t n) { return bernoulli_numbers(n).back(); }

/// B_n(z) = sum_k binom(n, k) B_k z^{n-k}
inline RationalPoly bernoulli_poly(std::size_t n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(n + 1);
  BigInt binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    c[n - k] = Rational(binom) * b[k];
    binom = binom * BigInt(n - k) / BigInt(k + 1);
  }
  return RationalPoly(std::move(c));
}

/// (S(r,0), ..., S(r,r)), signed Stirling numbers of the first kind.
inline std::vector<BigInt> stirling_first_row(unsigned r) {
  if (r < 1) throw std::invalid_argument("stirling_first_row requires r >= 1");
  std::vector<BigInt> row{BigInt(1)};  // r = 0
  for (unsigned n = 0; n < r; ++n) {
    // multiply by (t - n)
    std::vector<BigInt> next(row.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j + 1] += row[j];
      next[j] -= BigInt(n) * row[j];
    }
    row = std::move(next);
  }
  return row;
}

/// binom(z, r) = z (z-1) ... (z-r+1) / r!
inline RationalPoly binom_poly(unsigned r) {
  RationalPoly p = RationalPoly::constant(1);
  for (unsigned i = 0; i < r; ++i) p *= RationalPoly::affine(1, -Rational(i));
  return p / Rational(factorial(r));
}

/// Coefficients (in u) of binom(z - u, r - 1), each a polynomial in z. Empty for r = 0.
inline std::vector<RationalPoly> grj_row(unsigned r) {
  if (r == 0) return {};
  std::vector<RationalPoly> row{RationalPoly::constant(1)};
  for (unsigned i = 0; i + 1 < r; ++i) {
    // multiply by (z - i) - u
    const RationalPoly zi = RationalPoly::affine(1, -Rational(i));
    std::vector<RationalPoly> next(row.size() + 1);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j] * zi;
      next[j + 1] -= row[j];
    }
    row = std::move(next);
  }
  const Rational inv = Rational(1) / Rational(factorial(r - 1));
  for (auto& p : row) p = p * inv;
  return row;
}

inline RationalPoly grj_poly(unsigned r, unsigned j) {
  if (j >= r) return {};
  return grj_row(r)[j];
}

/// psi_r(z) = binom(z, r) + sum_{j<r} B_{j+1}/(j+1) G_{r,j}(z-1); psi_0 = 1.
inline RationalPoly psi_poly(unsigned r) {
  if (r == 0) return RationalPoly::constant(1);
  const auto b = bernoulli_numbers(r);
  const auto g = grj_row(r);
  RationalPoly psi = binom_poly(r);
  for (unsigned j = 0; j < r; ++j) psi += (b[j + 1] / Rational(j + 1)) * g[j].shifted(-1);
  return psi;
}

/// Q_r(z) = (-1)^r/(r-1)! sum_{l=1}^{r} S(r,l)/l (z^l - (-1)^l B_l)
inline RationalPoly q_poly(unsigned r) {
  if (r < 1) throw std::invalid_argument("q_poly requires r >= 1");
  const auto s = stirling_first_row(r);
  const auto b = bernoulli_numbers(r);
  RationalPoly sum;
  for (unsigned l = 1; l <= r; ++l) {
    const Rational sign_l = (l % 2 == 0) ? Rational(1) : Rational(-1);
    RationalPoly term = RationalPoly::monomial(1, l) - RationalPoly::constant(sign_l * b[l]);
    sum += (Rational(s[l]) / Rational(l)) * term;
  }
  const Rational sign_r = (r % 2 == 0) ? Rational(1) : Rational(-1);
  return (sign_r / Rational(factorial(r - 1))) * sum;
}

/// Entry s counts r-tuples in [0, p-1]^r with sum s: coefficients of (1 + x + ... + x^{p-1})^r.
inline std::vector<BigInt> composition_counts(unsigned p, unsigned r) {
  if (p < 1) throw std::invalid_argument("composition_counts requires p >= 1");
  std::vector<BigInt> counts{BigInt(1)};
  for (unsigned i = 0; i < r; ++i) {
    std::vector<BigInt> next(counts.size() + p - 1, BigInt(0));
    for (std::size_t s = 0; s < counts.size(); ++s)
      for (unsigned q = 0; q < p; ++q) next[s + q] += counts[s];
    counts = std::move(next);
  }
  return counts;
}

/// s_phi * [ sum_s counts[s] G_{r,j}((z+s)/p + sigma_phi) - G_{r,j}(z-1) ], exact in z.
inline RationalPoly phi_rj_poly(unsigned r, unsigned j, unsigned p, const ConventionSet& conv) {
  conv.require_resolved();
  if (r < 1 || j >= r) throw std::invalid_argument("phi_rj_poly requires r >= 1 and 0 <= j < r");
  const RationalPoly g = grj_poly(r, j);
  const auto counts = composition_counts(p, r);
  const Rational inv_p = Rational(1) / Rational(p);
  RationalPoly sum;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    sum += Rational(counts[s]) * g.compose_affine(inv_p, Rational(BigInt(s)) * inv_p + conv.sigma_phi);
  }
  return Rational(conv.s_phi) * (sum - g.shifted(-1));
}

/// z -> integral_a^z poly(t) dt
inline RationalPoly definite_integral_poly(const RationalPoly& poly, const Rational& a) {
  const RationalPoly anti = poly.antiderivative();
  return anti - RationalPoly::constant(anti(a));
}

/**
 * Polynomials a_j(z) with binom(x - z + r - 1, r - 1) = sum_j a_j(z) x^j.
 *
 * Setting x = k + z turns the Barnes multiplicity binom(k + r - 1, r - 1)
 * into a polynomial in (k + z), which splits zeta_r(s, z) into Hurwitz zetas:
 * zeta_r(s, z) = sum_j a_j(z) zeta(s - j, z).
 */
inline std::vector<RationalPoly> barnes_decomposition(unsigned r) {
  if (r < 1) throw std::invalid_argument("barnes_decomposition requires r >= 1");
  std::vector<RationalPoly> coeffs{RationalPoly::constant(1)};
  for (unsigned i = 0; i + 1 < r; ++i) {
    const RationalPoly c = RationalPoly::affine(-1, Rational(r - 1 - i));  // (r-1-i) - z
    std::vector<RationalPoly> next(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] += coeffs[k] * c;
    }
    coeffs = std::move(next);
  }
  const Rational inv = Rational(1) / Rational(factorial(r - 1));
  for (auto& p : coeffs) p = p * inv;
  return coeffs;
}

}  // namespace multigamma
