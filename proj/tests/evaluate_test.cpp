#include "multigamma/multigamma.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <future>
#include <span>
#include <vector>

namespace multigamma {
namespace {

using R = real50;
using C = Complex<R>;

EvalConfig calibrated() {
  EvalConfig cfg;
  cfg.conventions = ConventionSet::resolved_with(-1, Rational(-1), -1);
  return cfg;
}

R pi() { return boost::math::constants::pi<R>(); }
C cx(double re, double im = 0) { return C(R(re), R(im)); }

const std::vector<C>& grid() {
  static const std::vector<C> g{cx(0.5), cx(1.5), cx(2.5), cx(1, 1)};
  return g;
}

TEST(LogG0, Examples) {
  EXPECT_EQ(log_g0(cx(1)).value, cx(0));
  const R e = boost::math::constants::e<R>();
  EXPECT_LT(abs(log_g0(C(e)).value - cx(1)), R(1e-40));
  const auto minus_one = log_g0(cx(-1)).value;
  EXPECT_EQ(minus_one.re, 0);
  EXPECT_EQ(minus_one.im, pi());
  EXPECT_THROW(log_g0(cx(0)), SingularInput);
}

TEST(Extrapolate, ConstantAndFirstOrderSequences) {
  std::vector<LogValue<R>> constant(5, LogValue<R>{cx(3), Method::gauss, R(0), std::nullopt});
  const auto c = extrapolate(std::span<const LogValue<R>>(constant), 3);
  EXPECT_EQ(c.value, cx(3));
  EXPECT_EQ(c.err_est, 0);

  std::vector<LogValue<R>> seq;
  for (int k = 0; k < 4; ++k) seq.push_back({C(R(1) + R(1) / pow(R(2), k)), Method::gauss, R(0), std::nullopt});
  const auto e = extrapolate(std::span<const LogValue<R>>(seq), 1);
  EXPECT_LT(abs(e.value - cx(1)), R(1e-45));
}

TEST(Extrapolate, Errors) {
  std::vector<LogValue<R>> two(2, LogValue<R>{cx(1), Method::gauss, R(0), std::nullopt});
  EXPECT_THROW(extrapolate(std::span<const LogValue<R>>(two), 2), DomainError);
  two[1].method = Method::euler;
  EXPECT_THROW(extrapolate(std::span<const LogValue<R>>(two), 1), std::invalid_argument);
}

TEST(FitLimit, RemovesPolynomialAndInversePowers) {
  const std::vector<std::size_t> ladder{64, 91, 128, 181, 256, 362, 512, 724, 1024};
  std::vector<C> values;
  for (std::size_t n : ladder) {
    const R x(n);
    values.push_back(C(R(2) + R(3) * x - x * x / 7 + R(1) / x - R(5) / (x * x), R(-1) + x / 3));
  }
  const auto fit = fit_limit<R>(values, ladder, 2, 2);
  EXPECT_LT(abs(fit.value - cx(2, -1)), R(1e-35));
  EXPECT_LT(fit.error, R(1e-35));
  EXPECT_THROW(fit_limit<R>(std::span<const C>(values).first(4), std::span<const std::size_t>(ladder).first(4), 2, 2),
               DomainError);
}

TEST(ProductPartials, Examples) {
  const auto cfg = calibrated();
  for (std::size_t n : {1u, 7u, 100u}) {
    EXPECT_EQ(gauss_partial(1, cx(0), n, cfg).value, cx(0));
    EXPECT_EQ(euler_partial(1, cx(0), n, cfg).value, cx(0));
  }
  EXPECT_LT(abs(euler_partial(1, cx(1), 1, cfg).value), R(1e-45));
  EXPECT_EQ(gauss_partial(1, cx(0.5), 64, cfg).method, Method::gauss);
  EXPECT_EQ(euler_partial(1, cx(0.5), 64, cfg).method, Method::euler);
  EXPECT_THROW(gauss_partial(2, cx(-3), 16, cfg), SingularInput);
}

TEST(ProductRoutes, ReproduceLogGamma) {
  const auto cfg = calibrated();
  for (double z : {0.5, 1.5, 2.5}) {
    const R reference = testing::lgamma_reference(R(z) + 1);
    EXPECT_LT(abs(log_multigamma_gauss(1, cx(z), cfg).value - C(reference)), R(1e-15)) << z;
    EXPECT_LT(abs(log_multigamma_euler(1, cx(z), cfg).value - C(reference)), R(1e-15)) << z;
    EXPECT_LT(abs(testing::classical_log_gamma(R(z) + 1) - reference), R(1e-15)) << z;
  }
  const R log_gamma_three_halves = log(pi()) / 2 - log(R(2));
  EXPECT_LT(abs(log_multigamma_gauss(1, cx(0.5), cfg).value - C(log_gamma_three_halves)), R(1e-15));
}

TEST(ProductRoutes, NormalisationByEveryMethod) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 3; ++r) {
    EXPECT_LT(abs(log_multigamma_gauss(r, cx(0), cfg).value), R(1e-30)) << r;
    EXPECT_LT(abs(log_multigamma_euler(r, cx(0), cfg).value), R(1e-30)) << r;
    EXPECT_LT(abs(log_multigamma_asymptotic(r, cx(0), cfg).value), R(1e-10)) << r;
    EXPECT_EQ(log_multigamma(r, cx(1), cfg).value, cx(0)) << r;
  }
}

TEST(ProductRoutes, EulerAgreesWithGauss) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 2; ++r)
    for (const auto& z : grid()) {
      const auto g = log_multigamma_gauss(r, z, cfg);
      const auto e = log_multigamma_euler(r, z, cfg);
      EXPECT_LT(relative_residual(g.value, e.value), R(1e-8)) << r << " " << z;
    }
}

TEST(Asymptotic, SymbolicReductionAtRankOne) {
  const auto c = hs_coefficients(1);
  EXPECT_EQ(c.log_coeff, RationalPoly({make_rational(1, 2), Rational(1)}));
  EXPECT_EQ(c.power_part, RationalPoly({Rational(1), Rational(1)}));
  ASSERT_EQ(c.zeta_coeffs.size(), 1u);
  EXPECT_EQ(c.zeta_coeffs[0], RationalPoly::constant(1));
}

TEST(Asymptotic, StirlingFormAtTen) {
  const auto cfg = calibrated();
  const R z = 10;
  const R stirling = (z + R(0.5)) * log(z + 1) - (z + 1) + log(2 * pi()) / 2;
  const C hs = hs_expansion(1, C(z), cfg.precision);
  EXPECT_LT(abs(hs - C(stirling)), R(1e-40));
  EXPECT_LT(abs(hs - C(testing::lgamma_reference(z + 1))), R(1) / z);
}

TEST(Asymptotic, RecurrenceForcedValues) {
  const auto cfg = calibrated();
  EXPECT_LT(abs(log_multigamma_asymptotic(2, cx(1), cfg).value), R(1e-10));
  EXPECT_LT(abs(log_multigamma_asymptotic(2, cx(3), cfg).value - C(log(R(2)))), R(1e-10));
}

TEST(Asymptotic, RemainderDecaysLikeOneOverZ) {
  const auto model = fit_remainder_model<R>(1, calibrated());
  EXPECT_GE(model.exponent, 0.7);
  EXPECT_LE(model.exponent, 1.3);
  EXPECT_NEAR(model.constant, 1.0 / 12, 0.01);
}

TEST(Asymptotic, RawModeErrorEstimateIsHonest) {
  auto cfg = calibrated();
  cfg.extrapolation_order = 0;
  for (unsigned r = 1; r <= 3; ++r)
    for (const auto& z : grid()) {
      const auto raw = log_multigamma_asymptotic(r, z, cfg);
      const auto exact = log_multigamma_gauss(r, z, calibrated());
      EXPECT_LE(abs(raw.value - exact.value), raw.err_est) << r << " " << z;
    }
}

TEST(Asymptotic, SectorAndLattice) {
  const auto cfg = calibrated();
  EXPECT_THROW(hs_expansion(1, cx(-2), cfg.precision), DomainError);
  EXPECT_THROW(log_multigamma_asymptotic(2, cx(-4), cfg), SingularInput);
  EXPECT_NO_THROW(log_multigamma_asymptotic(2, cx(-30.5), cfg));
}

TEST(LogMultigamma, Examples) {
  const auto cfg = calibrated();
  EXPECT_EQ(log_multigamma(0, cx(2.5), cfg).value, C(log(R(2.5))));
  EXPECT_LT(abs(log_multigamma(2, cx(4), cfg).value - C(log(R(2)))), R(1e-15));
  // G_2(1/2) from the Hurwitz route: log G_2 = -log Gamma_2 + s_R * R-exponent
  const R half(0.5);
  const C expected = -barnes_zeta_oracle(2, half, cfg.precision).value - r_exponent(2, C(half), cfg.precision);
  EXPECT_LT(abs(log_multigamma(2, C(half), cfg).value - expected), R(1e-15));
  EXPECT_LT(abs(log_multigamma(2, C(half), cfg).value - C(R("-0.5054330544896953827976849898083449517214"))),
            R(1e-15));
}

TEST(LogMultigamma, SingularLattice) {
  const auto cfg = calibrated();
  for (unsigned r = 0; r <= 3; ++r) {
    EXPECT_THROW(log_multigamma(r, cx(0), cfg), SingularInput);
    EXPECT_THROW(log_multigamma(r, cx(-3), cfg), SingularInput);
    EXPECT_THROW(log_multigamma(r, C(R(-2) + R(1e-9)), cfg), SingularInput);
  }
  try {
    log_multigamma(2, cx(-3), cfg);
  } catch (const SingularInput& e) {
    EXPECT_NE(std::string(e.what()).find("singular lattice point z = -3"), std::string::npos);
  }
}

TEST(LogMultigamma, Recurrence) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 3; ++r)
    for (const auto& z : grid()) {
      const C lhs = log_multigamma(r, z + cx(1), cfg).value;
      const C rhs = log_multigamma(r - 1, z, cfg).value + log_multigamma(r, z, cfg).value;
      EXPECT_LT(abs(lhs - rhs), R(1e-8)) << r << " " << z;
    }
}

TEST(LogMultigamma, HighRankRecurrence) {
  const auto cfg = calibrated();
  for (unsigned r = 4; r <= 8; ++r) {
    const C z = cx(2.5);
    const auto hi = log_multigamma(r, z + cx(1), cfg);
    const C rhs = log_multigamma(r - 1, z, cfg).value + log_multigamma(r, z, cfg).value;
    EXPECT_LT(abs(hi.value - rhs), R(1e-15)) << r;
    EXPECT_LT(hi.err_est, R(1e-15)) << r;
  }
}

TEST(LogMultigamma, LadderTooShortForRank) {
  EvalConfig cfg;
  cfg.truncation = 1 << 9;
  EXPECT_EQ(cfg.ladder().size(), 7u);
  EXPECT_NO_THROW(log_multigamma(2, cx(1.5), cfg));
  EXPECT_THROW(log_multigamma(3, cx(1.5), cfg), DomainError);
}

TEST(LogMultigamma, CrossMethodAgreement) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 3; ++r)
    for (const auto& z : grid()) {
      const auto g = log_multigamma_gauss(r, z, cfg);
      const auto e = log_multigamma_euler(r, z, cfg);
      const auto a = log_multigamma_asymptotic(r, z, cfg);
      using std::max;
      EXPECT_LE(abs(g.value - e.value), 10 * max(g.err_est, e.err_est)) << r << " " << z;
      EXPECT_LE(abs(g.value - a.value), 10 * max(g.err_est, a.err_est)) << r << " " << z;
      EXPECT_LE(abs(e.value - a.value), 10 * max(e.err_est, a.err_est)) << r << " " << z;
    }
}

TEST(LogMultigamma, CrossValidationAttachesDiscrepancy) {
  auto cfg = calibrated();
  cfg.cross_validate = true;
  const auto v = log_multigamma(2, cx(0.5, 1), cfg);
  ASSERT_TRUE(v.discrepancy.has_value());
  EXPECT_LT(*v.discrepancy, R(1e-8));
  EXPECT_EQ(v.method, Method::gauss);
}

TEST(LogMultigamma, CrossValidationRejectsRawAsymptotic) {
  auto cfg = calibrated();
  cfg.cross_validate = true;
  cfg.extrapolation_order = 0;
  EXPECT_THROW(log_multigamma(2, cx(0.5), cfg), CrossValidationError);
}

TEST(LogMultigamma, IntegerLattice) {
  const auto cfg = calibrated();
  for (unsigned n = 2; n <= 8; ++n) {
    const R expected = testing::log_barnes_g_integer<R>(n);
    const R got = exp(log_multigamma(2, cx(n), cfg).value).re;
    EXPECT_LT(abs(got - exp(expected)) / exp(expected), R(1e-10)) << n;
  }
  for (unsigned n = 1; n <= 6; ++n) {
    const R expected = testing::log_g3_integer<R>(n);
    EXPECT_LT(abs(log_multigamma(3, cx(n), cfg).value - C(expected)), R(1e-10)) << n;
  }
}

TEST(LogMultigamma, Convexity) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 2; ++r) {
    std::vector<R> f;
    for (int k = 0; k <= 8; ++k) f.push_back(log_multigamma_gauss(r, cx(k), cfg).value.re);
    for (unsigned pass = 0; pass <= r; ++pass) {
      for (std::size_t i = 0; i + 1 < f.size(); ++i) f[i] = f[i + 1] - f[i];
      f.pop_back();
    }
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_GE(f[i], R(-1e-8)) << r << " " << i;
  }
}

TEST(GammaR, OracleEquivalence) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 3; ++r)
    for (double z : {0.5, 1.0, 1.5, 2.0}) {
      const auto a = log_gamma_r(r, cx(z), cfg);
      const auto o = barnes_zeta_oracle(r, R(z), cfg.precision);
      EXPECT_LT(abs(a.value - o.value), R(1e-8)) << r << " " << z;
    }
}

TEST(GammaR, Examples) {
  const auto cfg = calibrated();
  const R half_log_two_pi = log(2 * pi()) / 2;
  EXPECT_LT(abs(log_gamma_r(1, cx(1), cfg).value - C(-half_log_two_pi)), R(1e-30));
  EXPECT_LT(abs(log_gamma_r(1, cx(2), cfg).value - C(-half_log_two_pi)), R(1e-30));
  EXPECT_LT(abs(barnes_zeta_oracle(1, R(0.5), cfg.precision).value - C(-log(R(2)) / 2)), R(1e-30));
  EXPECT_THROW(barnes_zeta_oracle(1, R(0), cfg.precision), DomainError);
  EXPECT_THROW(log_gamma_r(1, cx(1), EvalConfig{}), ConventionError);
}

TEST(MultipleSine, RankOneIsReciprocalSine) {
  const auto cfg = calibrated();
  EXPECT_LT(abs(multiple_sine(1, cx(0.5), cfg) - cx(0.5)), R(1e-15));
  for (double z : {0.1, 0.25, 0.7, 0.9}) {
    const C s = multiple_sine(1, cx(z), cfg);
    EXPECT_LT(abs(s * C(2 * sin(pi() * R(z))) - cx(1)), R(1e-15)) << z;
  }
}

TEST(MultipleSine, RankTwoAgainstOracle) {
  const auto cfg = calibrated();
  EXPECT_LT(abs(multiple_sine(2, cx(1), cfg) - cx(1)), R(1e-15));
  const R expected = exp(barnes_zeta_oracle(2, R(1.5), cfg.precision).value.re -
                         barnes_zeta_oracle(2, R(0.5), cfg.precision).value.re);
  EXPECT_LT(abs(multiple_sine(2, cx(0.5), cfg) - C(expected)), R(1e-12));
}

TEST(Multiplication, ResidualsOnGrid) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 2; ++r)
    for (unsigned p : {2u, 3u})
      for (double z : {1.0, 1.5, 2.0, 2.5}) {
        const auto rep = multiplication_residual(r, p, cx(z), cfg);
        EXPECT_TRUE(rep.pass) << r << " " << p << " " << z << " " << rep.residual;
        EXPECT_LT(rep.residual, R(1e-15));
      }
  const auto complex_rep = multiplication_residual(2, 3, cx(0.5, 1), cfg);
  EXPECT_LT(complex_rep.residual, R(1e-12));
}

TEST(Multiplication, TrivialFactorIsExact) {
  const auto cfg = calibrated();
  for (unsigned r = 1; r <= 3; ++r) EXPECT_EQ(multiplication_residual(r, 1, cx(1.7), cfg).residual, 0) << r;
}

TEST(Multiplication, GaussLegendreClosedForm) {
  const auto cfg = calibrated();
  const auto rep = multiplication_residual(1, 2, cx(1), cfg);
  EXPECT_LT(abs(rep.lhs - C(log(pi()) / 2)), R(1e-15));
  EXPECT_LT(abs(rep.rhs - C(log(pi()) / 2)), R(1e-15));
  EXPECT_THROW(multiplication_residual(1, 2, cx(1), EvalConfig{}), ConventionError);
}

TEST(Calibration, UniqueAndIdempotent) {
  const EvalConfig cfg;
  const auto first = calibrate_conventions<R>(cfg);
  EXPECT_EQ(first.s_phi, -1);
  EXPECT_EQ(first.sigma_phi, Rational(-1));
  EXPECT_EQ(first.s_R, -1);
  EXPECT_EQ(first.evidence.size(), 72u);
  const auto second = calibrate_conventions<R>(cfg);
  EXPECT_EQ(first, second);
  EXPECT_EQ(to_json(first).dump(), to_json(second).dump());
}

TEST(Calibration, NothingSurvivesAbsurdTolerance) {
  EvalConfig cfg;
  cfg.tolerance = 1e-300;
  try {
    calibrate_conventions<R>(cfg);
    FAIL() << "expected CalibrationError";
  } catch (const CalibrationError& e) {
    EXPECT_NE(std::string(e.what()).find("0 convention sets survive"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("gamma1 z=1/2"), std::string::npos);
  }
}

TEST(Config, Validation) {
  EvalConfig cfg;
  cfg.shift_radius = 5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = EvalConfig{};
  cfg.extrapolation_order = 9;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = EvalConfig{};
  cfg.precision = Precision{60, 10};
  EXPECT_THROW(log_multigamma(1, cx(1.5), cfg), std::invalid_argument);
  EXPECT_NO_THROW(log_multigamma(1, Complex<real100>(real100(1.5)), cfg));
}

TEST(Concurrency, ParallelGridMatchesSequential) {
  const auto cfg = calibrated();
  std::vector<C> points{cx(0.5), cx(1.5, 0.5), cx(2.5, -1), cx(3.25)};
  std::vector<std::future<C>> futures;
  for (const auto& z : points)
    futures.push_back(std::async(std::launch::async, [&cfg, z] { return log_multigamma(2, z, cfg).value; }));
  for (std::size_t i = 0; i < points.size(); ++i) EXPECT_EQ(futures[i].get(), log_multigamma(2, points[i], cfg).value);
}

TEST(Json, RoundTrips) {
  const auto poly = psi_poly(3);
  EXPECT_EQ(poly_from_json(to_json(poly)), poly);
  EXPECT_EQ(to_json(RationalPoly({make_rational(-1, 2), Rational(1)})).dump(),
            R"({"coeffs":[["-1","2"],["1","1"]]})");

  auto conv = ConventionSet::resolved_with(-1, Rational(-1), -1);
  conv.evidence.push_back({"mult r=1 p=2 z=1", -1, Rational(-1), -1, 1e-20, true});
  const auto back = conventions_from_json(to_json(conv));
  EXPECT_EQ(back, conv);
  ASSERT_EQ(back.evidence.size(), 1u);
  EXPECT_EQ(back.evidence[0].check, "mult r=1 p=2 z=1");

  const LogValue<R> v{cx(0.5, -0.25), Method::euler, R(1e-20), std::nullopt};
  const Json j = to_json(v, 10);
  EXPECT_EQ(j.dump(), R"({"re":"5.000000000e-01","im":"-2.500000000e-01","method":"euler","err_est":"1.00e-20"})");
  EXPECT_THROW(conventions_from_json(Json{{"s_phi", 2}, {"sigma_phi", "-1"}, {"s_R", 1}}), std::invalid_argument);
}

}  // namespace
}  // namespace multigamma
