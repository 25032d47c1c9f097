#pragma once

/**
 * @file identities.hpp
 * @brief Exact verification of the polynomial identities linking binomials,
 * G_{r,j}, psi_r and Q_r.
 *
 * Two-variable identities are expanded symbolically and compared
 * coefficient by coefficient; nothing here samples points.
 */

#include "multigamma/exact_poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multigamma {

struct IdentityReport {
  std::string identity;
  unsigned r = 0;
  std::optional<unsigned> p;
  bool pass = false;
  std::optional<std::string> witness;  // first nonzero difference, on failure
  std::string note;                    // which variant held, for probed identities
};

namespace detail {

/// Dense bivariate polynomial, c[i][j] multiplies x^i y^j.
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly in_x(const RationalPoly& p) {
    BiPoly b;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) b.at(i, 0) = p.coeffs()[i];
    return b.trimmed();
  }
  static BiPoly in_y(const RationalPoly& p) {
    BiPoly b;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) b.at(0, j) = p.coeffs()[j];
    return b.trimmed();
  }
  /// p(x + y) via the binomial theorem; with negate_y, p(x - y).
  static BiPoly of_sum(const RationalPoly& p, bool negate_y = false) {
    BiPoly b;
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
      BigInt binom = 1;
      for (std::size_t k = 0; k <= n; ++k) {
        Rational term = p.coeffs()[n] * Rational(binom);
        if (negate_y && k % 2 == 1) term = -term;
        b.at(n - k, k) += term;
        binom = binom * BigInt(n - k) / BigInt(k + 1);
      }
    }
    return b.trimmed();
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly c = a;
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_[i].size(); ++j) c.at(i, j) += b.c_[i][j];
    return c.trimmed();
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + Rational(-1) * b; }
  friend BiPoly operator*(const Rational& s, const BiPoly& a) {
    BiPoly c = a;
    for (auto& row : c.c_)
      for (auto& v : row) v *= s;
    return c.trimmed();
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly c;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
        if (a.c_[i][j] == 0) continue;
        for (std::size_t k = 0; k < b.c_.size(); ++k)
          for (std::size_t l = 0; l < b.c_[k].size(); ++l) c.at(i + k, j + l) += a.c_[i][j] * b.c_[k][l];
      }
    return c.trimmed();
  }

  bool is_zero() const { return c_.empty(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j) {
        if (c_[i][j] == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + multigamma::to_string(c_[i][j]) + ")*x^" + std::to_string(i) + "*y^" + std::to_string(j);
      }
    return out.empty() ? "0" : out;
  }

 private:
  Rational& at(std::size_t i, std::size_t j) {
    if (c_.size() <= i) c_.resize(i + 1);
    if (c_[i].size() <= j) c_[i].resize(j + 1);
    return c_[i][j];
  }
  BiPoly trimmed() {
    for (auto& row : c_)
      while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
    return *this;
  }

  std::vector<std::vector<Rational>> c_;
};

inline Rational sign_pow(unsigned n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

inline IdentityReport poly_report(std::string name, unsigned r, const RationalPoly& difference) {
  IdentityReport rep{std::move(name), r, std::nullopt, difference.is_zero(), std::nullopt, {}};
  if (!rep.pass) rep.witness = "difference = " + difference.to_string();
  return rep;
}

inline IdentityReport bipoly_report(std::string name, unsigned r, const BiPoly& difference) {
  IdentityReport rep{std::move(name), r, std::nullopt, difference.is_zero(), std::nullopt, {}};
  if (!rep.pass) rep.witness = "difference = " + difference.to_string();
  return rep;
}

// Stirling row that also covers r = 0 (the empty product t^0).
inline std::vector<BigInt> stirling_row_from_zero(unsigned r) {
  return r == 0 ? std::vector<BigInt>{BigInt(1)} : stirling_first_row(r);
}

}  // namespace detail

/// sum_k binom(x, r-k) binom(y, k) = binom(x+y, r)
inline IdentityReport check_vandermonde(unsigned r) {
  using detail::BiPoly;
  BiPoly lhs;
  for (unsigned k = 0; k <= r; ++k) lhs = lhs + BiPoly::in_x(binom_poly(r - k)) * BiPoly::in_y(binom_poly(k));
  return detail::bipoly_report("vandermonde", r, lhs - BiPoly::of_sum(binom_poly(r)));
}

/// sum_k binom(x, r-k) G_{k,j}(y) = G_{r,j}(x+y), all j < r
inline IdentityReport check_grj_addition(unsigned r) {
  using detail::BiPoly;
  for (unsigned j = 0; j < r; ++j) {
    BiPoly lhs;
    for (unsigned k = 1; k <= r; ++k) lhs = lhs + BiPoly::in_x(binom_poly(r - k)) * BiPoly::in_y(grj_poly(k, j));
    auto rep = detail::bipoly_report("grj_addition", r, lhs - BiPoly::of_sum(grj_poly(r, j)));
    if (!rep.pass) {
      rep.witness = "j=" + std::to_string(j) + ": " + *rep.witness;
      return rep;
    }
  }
  return {"grj_addition", r, std::nullopt, true, std::nullopt, {}};
}

/// sum_j G_{r,j}(z) u^j = binom(z - u, r - 1), expanded independently
inline IdentityReport check_grj_generating(unsigned r) {
  using detail::BiPoly;
  BiPoly lhs;
  for (unsigned j = 0; j < r; ++j) lhs = lhs + BiPoly::in_x(grj_poly(r, j)) * BiPoly::in_y(RationalPoly::monomial(1, j));
  return detail::bipoly_report("grj_generating", r, lhs - BiPoly::of_sum(binom_poly(r - 1), true));
}

/// binom(z,r) + sum_j B_{j+1}/(j+1) G_{r,j}(z-1) - int_{-1}^{z-1} binom(t,r-1) dt
///   = sum_j B_{j+1}/(j+1) G_{r,j}(-1)
inline IdentityReport check_un36(unsigned r) {
  const auto b = bernoulli_numbers(r);
  Rational constant = 0;
  for (unsigned j = 0; j < r; ++j) constant += b[j + 1] / Rational(j + 1) * grj_poly(r, j)(Rational(-1));
  const RationalPoly integral = definite_integral_poly(binom_poly(r - 1), Rational(-1)).shifted(-1);
  return detail::poly_report("un36", r, psi_poly(r) - integral - RationalPoly::constant(constant));
}

inline IdentityReport check_qpsi(unsigned r) {
  return detail::poly_report("qpsi", r, q_poly(r) - detail::sign_pow(r) * psi_poly(r));
}

/// (-1)^r Q_r(r - z) = Q_r(z)
inline IdentityReport check_reflection(unsigned r) {
  const RationalPoly q = q_poly(r);
  return detail::poly_report("reflection", r, detail::sign_pow(r) * q.compose_affine(-1, Rational(r)) - q);
}

/// G_{r,j}(0) = (-1)^j / (r-1)! * S(r-1, j)
inline IdentityReport check_grj_at_zero(unsigned r) {
  const auto s = detail::stirling_row_from_zero(r - 1);
  const Rational inv = Rational(1) / Rational(factorial(r - 1));
  for (unsigned j = 0; j < r; ++j) {
    const Rational lhs = grj_poly(r, j)(Rational(0));
    const Rational rhs = detail::sign_pow(j) * inv * Rational(s[j]);
    if (lhs != rhs) {
      IdentityReport rep{"grj_at_zero", r, std::nullopt, false, std::nullopt, {}};
      rep.witness = "j=" + std::to_string(j) + ": " + to_string(lhs) + " != " + to_string(rhs);
      return rep;
    }
  }
  return {"grj_at_zero", r, std::nullopt, true, std::nullopt, {}};
}

/// psi_r(z+1) - psi_r(z) = psi_{r-1}(z), psi_0 = 1
inline IdentityReport check_psi_difference(unsigned r) {
  const RationalPoly psi = psi_poly(r);
  return detail::poly_report("psi_difference", r, psi.shifted(1) - psi - psi_poly(r - 1));
}

/**
 * sum_{m=0}^{U} G_{r,j}(z+m) = G_{r+1,j}(z+L) - G_{r+1,j}(z), L = 0..4.
 * Probes U = L (as printed) and U = L - 1; passes if one variant holds for
 * every j and L, and names it in the note.
 */
inline IdentityReport check_telescoping(unsigned r, unsigned l_max = 4) {
  auto holds = [&](bool inclusive) {
    for (unsigned j = 0; j < r; ++j) {
      const RationalPoly g = grj_poly(r, j), g_next = grj_poly(r + 1, j);
      for (unsigned L = 0; L <= l_max; ++L) {
        RationalPoly lhs;
        const unsigned terms = inclusive ? L + 1 : L;
        for (unsigned m = 0; m < terms; ++m) lhs += g.shifted(Rational(m));
        if (!(lhs - (g_next.shifted(Rational(L)) - g_next)).is_zero()) return false;
      }
    }
    return true;
  };
  const bool inclusive = holds(true), exclusive = holds(false);
  IdentityReport rep{"telescoping", r, std::nullopt, inclusive || exclusive, std::nullopt, {}};
  if (inclusive && exclusive) rep.note = "both upper limits hold";
  else if (inclusive) rep.note = "holds with upper limit m = L";
  else if (exclusive) rep.note = "holds with upper limit m = L-1 (printed limit m = L fails)";
  else rep.witness = "neither upper limit holds";
  return rep;
}

/**
 * Rewritten form of Q_r:
 *   (-1)^r Q_r = 1/(r-1)! sum_{l<r} S(r-1,l) [(-1)^{l+1} B_{l+1}/(l+1) - (z-1)^{l+1}/(l+1)]
 * Probed with both overall signs, and with B_1 = -1/2 and B_1 = +1/2 in the
 * l = 0 term (the only place the B_1 convention enters, since S(r-1,0) = 0
 * for r >= 2). The note records the variant that holds.
 */
inline IdentityReport check_q_rewrite(unsigned r) {
  const auto s = detail::stirling_row_from_zero(r - 1);
  const RationalPoly target = detail::sign_pow(r) * q_poly(r);
  auto rewrite = [&](const Rational& b1) {
    auto b = bernoulli_numbers(r);
    if (b.size() > 1) b[1] = b1;
    RationalPoly sum;
    for (unsigned l = 0; l < r; ++l) {
      const Rational c = Rational(s[l]) / Rational(l + 1);
      const RationalPoly power = RationalPoly::monomial(1, l + 1).shifted(-1);
      sum += c * (RationalPoly::constant(detail::sign_pow(l + 1) * b[l + 1]) - power);
    }
    return sum / Rational(factorial(r - 1));
  };
  IdentityReport rep{"q_rewrite", r, std::nullopt, false, std::nullopt, {}};
  for (const Rational& b1 : {Rational(-1, 2), Rational(1, 2)}) {
    const RationalPoly sum = rewrite(b1);
    const std::string b1_text = b1 < 0 ? "B_1 = -1/2" : "B_1 = +1/2";
    if ((sum - target).is_zero()) rep.note = "holds as printed with " + b1_text;
    else if ((sum + target).is_zero()) rep.note = "holds with the overall sign reversed, " + b1_text;
    if (!rep.note.empty()) {
      rep.pass = true;
      return rep;
    }
  }
  rep.witness = "difference = " + (rewrite(Rational(-1, 2)) - target).to_string();
  return rep;
}

/// counts palindromic, summing to p^r
inline IdentityReport check_composition_counts(unsigned p, unsigned r) {
  const auto c = composition_counts(p, r);
  BigInt total = 0;
  bool palindromic = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    total += c[i];
    palindromic = palindromic && c[i] == c[c.size() - 1 - i];
  }
  const BigInt expected = boost::multiprecision::pow(BigInt(p), r);
  IdentityReport rep{"composition_counts", r, p, palindromic && total == expected, std::nullopt, {}};
  if (!rep.pass) rep.witness = "total " + total.str() + (palindromic ? "" : ", not palindromic");
  return rep;
}

/// sum_{k<n} binom(n,k) B_k = 0 for n = 2..n_max
inline IdentityReport check_bernoulli_recurrence(std::size_t n_max) {
  const auto b = bernoulli_numbers(n_max);
  for (std::size_t n = 2; n <= n_max; ++n) {
    Rational acc = 0;
    BigInt binom = 1;
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(binom) * b[k];
      binom = binom * BigInt(n - k) / BigInt(k + 1);
    }
    if (acc != 0) return {"bernoulli_recurrence", 0, std::nullopt, false, "n=" + std::to_string(n), {}};
  }
  return {"bernoulli_recurrence", 0, std::nullopt, true, std::nullopt, {}};
}

/// Every exact identity for r = 1..r_max, plus composition-count checks for each p.
inline std::vector<IdentityReport> check_identities(unsigned r_max, const std::vector<unsigned>& p_list = {}) {
  if (r_max < 1) throw std::invalid_argument("check_identities requires r_max >= 1");
  std::vector<IdentityReport> out;
  out.push_back(check_bernoulli_recurrence(2 * r_max + 2));
  for (unsigned r = 1; r <= r_max; ++r) {
    out.push_back(check_vandermonde(r));
    out.push_back(check_grj_addition(r));
    out.push_back(check_grj_generating(r));
    out.push_back(check_un36(r));
    out.push_back(check_qpsi(r));
    out.push_back(check_reflection(r));
    out.push_back(check_grj_at_zero(r));
    out.push_back(check_psi_difference(r));
    out.push_back(check_telescoping(r));
    out.push_back(check_q_rewrite(r));
    for (unsigned p : p_list) out.push_back(check_composition_counts(p, r));
  }
  return out;
}

}  // namespace multigamma
