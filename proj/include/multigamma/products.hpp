#pragma once

/**
 * @file products.hpp
 * @brief Truncated Gauss and Euler products for log G_r(z+1).
 *
 * With L_k(x) = log G_k(x) and L_k(x+1) = L_k(x) + L_{k-1}(x), the Gauss
 * partial product is
 *
 *   P_N(z) = sum_{n=1}^{N} [L_{r-1}(n) - L_{r-1}(z+n)]
 *          + sum_{k=0}^{r-1} binom(z, r-k) L_k(N+1),
 *
 * and the Euler form accumulates the same quantity factor by factor,
 *
 *   sum_{n=1}^{N} [ -(L_{r-1}(z+n) - L_{r-1}(n)) + sum_k binom(z, r-k) (L_k(n+1) - L_k(n)) ],
 *
 * keeping the small differences L_k(z+n) - L_k(n) and log(1 + 1/n) explicit.
 * Both sweeps need the lower levels L_k(z+1), k < r, which come from the same
 * construction one level down. The truncation error is a power series in 1/N.
 */

#include "multigamma/eval_config.hpp"
#include "multigamma/extrapolate.hpp"
#include "multigamma/log_value.hpp"

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace multigamma {

enum class ProductForm { gauss, euler };

namespace detail {

template <class Real>
std::vector<Complex<Real>> binom_weights(unsigned r, const Complex<Real>& z) {
  std::vector<Complex<Real>> w(r);
  for (unsigned k = 0; k < r; ++k) w[k] = binom(z, r - k);
  return w;
}

// log 1, ..., log n_max, shared across sweeps.
template <class Real>
std::shared_ptr<const std::vector<Real>> log_table(std::size_t n_max) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<Real>> table = std::make_shared<const std::vector<Real>>();
  std::lock_guard lock(mutex);
  if (table->size() < n_max) {
    using std::log;
    auto grown = std::make_shared<std::vector<Real>>(*table);
    for (std::size_t n = grown->size() + 1; n <= n_max; ++n) grown->push_back(log(Real(n)));
    table = std::move(grown);
  }
  return table;
}

template <class Real>
void require_ladder(std::span<const std::size_t> ladder) {
  if (ladder.empty()) throw std::invalid_argument("empty product ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i)
    if (ladder[i] < 1 || (i > 0 && ladder[i] <= ladder[i - 1]))
      throw std::invalid_argument("product ladder must be increasing and positive");
}

// Partials at every N in the ladder, in one pass. start[k] = L_k(z+1), k < r.
template <class Real>
std::vector<Complex<Real>> gauss_sweep(unsigned r, const Complex<Real>& z, std::span<const Complex<Real>> start,
                                       std::span<const std::size_t> ladder) {
  require_ladder<Real>(ladder);
  using std::log;
  const auto weights = binom_weights(r, z);
  const auto logs = log_table<Real>(ladder.back() + 1);
  std::vector<Real> ell(r, Real(0));
  std::vector<Complex<Real>> lam(start.begin(), start.begin() + r);
  std::vector<Complex<Real>> out;
  Complex<Real> acc;
  std::size_t next = 0;
  for (std::size_t n = 1; next < ladder.size(); ++n) {
    acc += Complex<Real>(ell[r - 1]) - lam[r - 1];
    for (unsigned k = r - 1; k >= 1; --k) {
      ell[k] += ell[k - 1];
      lam[k] += lam[k - 1];
    }
    ell[0] = (*logs)[n];
    lam[0] = log(z + Complex<Real>(Real(n + 1)));
    if (n == ladder[next]) {
      Complex<Real> tail = acc;
      for (unsigned k = 0; k < r; ++k) tail += weights[k] * ell[k];
      out.push_back(tail);
      ++next;
    }
  }
  return out;
}

template <class Real>
std::vector<Complex<Real>> euler_sweep(unsigned r, const Complex<Real>& z, std::span<const Complex<Real>> start,
                                       std::span<const std::size_t> ladder) {
  require_ladder<Real>(ladder);
  using std::log;
  using std::log1p;
  const auto weights = binom_weights(r, z);
  const auto logs = log_table<Real>(ladder.back() + 1);
  std::vector<Real> ell(r, Real(0));
  std::vector<Complex<Real>> diff(start.begin(), start.begin() + r);  // L_k(z+n) - L_k(n)
  std::vector<Complex<Real>> out;
  Complex<Real> acc;
  std::size_t next = 0;
  for (std::size_t n = 1; next < ladder.size(); ++n) {
    Complex<Real> factor = weights[0] * log1p(Real(1) / Real(n)) - diff[r - 1];
    for (unsigned k = 1; k < r; ++k) factor += weights[k] * ell[k - 1];
    acc += factor;
    for (unsigned k = r - 1; k >= 1; --k) {
      diff[k] += diff[k - 1];
      ell[k] += ell[k - 1];
    }
    diff[0] = log1p(z / Complex<Real>(Real(n + 1)));
    ell[0] = (*logs)[n];
    if (n == ladder[next]) {
      out.push_back(acc);
      ++next;
    }
  }
  return out;
}

template <class Real>
std::vector<Complex<Real>> product_sweep(ProductForm form, unsigned r, const Complex<Real>& z,
                                         std::span<const Complex<Real>> start, std::span<const std::size_t> ladder) {
  return form == ProductForm::gauss ? gauss_sweep(r, z, start, ladder) : euler_sweep(r, z, start, ladder);
}

template <class Real>
Real binom_real(std::size_t n, unsigned k) {
  Real acc = 1;
  for (unsigned i = 0; i < k; ++i) acc = acc * Real(n - i) / Real(i + 1);
  return acc;
}

template <class Real>
void require_product_domain(const Complex<Real>& z) {
  // log G_r(z+1) is singular where z+1 is a non-positive integer
  reject_lattice(z + Complex<Real>(Real(1)));
}

}  // namespace detail

/**
 * log G_k(z+1) for k = 0..r. A start-value error e_i in L_i(z+1) enters the
 * level-k partial sum as exactly -e_i binom(N, k-i), a polynomial in N with
 * no constant term, so each level is fitted with those polynomial terms
 * alongside the 1/N series and the seeds' errors drop out. Level r uses
 * cfg.extrapolation_order inverse powers; seed levels use as many as the
 * ladder allows, up to 8. Order 0 returns the last partial as is.
 */
template <class Real>
std::vector<LogValue<Real>> product_hierarchy(unsigned r, const Complex<Real>& z, const EvalConfig& cfg,
                                              ProductForm form = ProductForm::gauss) {
  cfg.validate();
  require_capacity<Real>(cfg.precision);
  detail::require_product_domain(z);
  const Method tag = form == ProductForm::gauss ? Method::gauss : Method::euler;
  const auto ladder = cfg.ladder();
  const std::size_t n = ladder.size();
  if (r > 0 && n < r + 1 + (cfg.extrapolation_order > 0 ? cfg.extrapolation_order : 0))
    throw DomainError("product ladder too short for rank " + std::to_string(r) + "; raise the truncation");

  std::vector<LogValue<Real>> levels;
  levels.push_back({checked(log(z + Complex<Real>(Real(1))), "log G_0"), Method::exact, Real(0), std::nullopt});
  std::vector<Complex<Real>> start{levels[0].value};
  for (unsigned k = 1; k <= r; ++k) {
    auto partials = detail::product_sweep(form, k, z, std::span<const Complex<Real>>(start),
                                          std::span<const std::size_t>(ladder));
    for (auto& p : partials) p = checked(p, "product partial");
    LogValue<Real> value{partials.back(), tag, Real(0), std::nullopt};
    const unsigned order = k == r ? cfg.extrapolation_order : static_cast<unsigned>(std::min<std::size_t>(8, n - 1 - k));
    if (order == 0) {
      value.err_est = abs(partials[n - 1] - partials[n - 2]);
      for (unsigned i = 1; i < k; ++i) value.err_est += levels[i].err_est * detail::binom_real<Real>(ladder.back(), k - i);
    } else {
      const auto fit = fit_limit<Real>(std::span<const Complex<Real>>(partials), std::span<const std::size_t>(ladder),
                                       k - 1, order);
      value.value = fit.value;
      value.err_est = fit.error;
    }
    levels.push_back(value);
    start.push_back(value.value);
  }
  return levels;
}

/// Gauss partial product P_N for log G_r(z+1), seeded by extrapolated lower levels.
template <class Real>
LogValue<Real> gauss_partial(unsigned r, const Complex<Real>& z, std::size_t n, const EvalConfig& cfg) {
  if (r == 0) throw std::invalid_argument("gauss_partial needs r >= 1");
  const auto seeds = product_hierarchy(r - 1, z, cfg);
  std::vector<Complex<Real>> start;
  for (const auto& s : seeds) start.push_back(s.value);
  const std::size_t ladder[] = {n};
  const auto p = detail::gauss_sweep(r, z, std::span<const Complex<Real>>(start), std::span<const std::size_t>(ladder));
  return {p.front(), Method::gauss, Real(0), std::nullopt};
}

/// Euler partial product for log G_r(z+1) over n = 1..N.
template <class Real>
LogValue<Real> euler_partial(unsigned r, const Complex<Real>& z, std::size_t n, const EvalConfig& cfg) {
  if (r == 0) throw std::invalid_argument("euler_partial needs r >= 1");
  const auto seeds = product_hierarchy(r - 1, z, cfg, ProductForm::euler);
  std::vector<Complex<Real>> start;
  for (const auto& s : seeds) start.push_back(s.value);
  const std::size_t ladder[] = {n};
  const auto p = detail::euler_sweep(r, z, std::span<const Complex<Real>>(start), std::span<const std::size_t>(ladder));
  return {p.front(), Method::euler, Real(0), std::nullopt};
}

/// log G_r(z+1) from the Gauss product, extrapolated over the ladder.
template <class Real>
LogValue<Real> log_multigamma_gauss(unsigned r, const Complex<Real>& z, const EvalConfig& cfg) {
  return product_hierarchy(r, z, cfg, ProductForm::gauss).back();
}

/// log G_r(z+1) from the Euler product, extrapolated over the ladder.
template <class Real>
LogValue<Real> log_multigamma_euler(unsigned r, const Complex<Real>& z, const EvalConfig& cfg) {
  return product_hierarchy(r, z, cfg, ProductForm::euler).back();
}

}  // namespace multigamma
