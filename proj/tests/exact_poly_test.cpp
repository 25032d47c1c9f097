#include "multigamma/exact_poly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <thread>

namespace multigamma {
namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Independent oracle: B_n = n! * [t^n] t/(e^t - 1), by inverting the series
// (e^t - 1)/t = sum_n t^n/(n+1)!.
std::vector<Rational> bernoulli_by_series_inversion(std::size_t n_max) {
  std::vector<Rational> denom(n_max + 1), inv(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) denom[n] = Rational(1) / Rational(factorial(static_cast<unsigned>(n + 1)));
  inv[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += denom[k] * inv[n - k];
    inv[n] = -acc;
  }
  for (std::size_t n = 0; n <= n_max; ++n) inv[n] *= Rational(factorial(static_cast<unsigned>(n)));
  return inv;
}

BigInt integer_binomial(long n, unsigned k) {
  // n may be negative: generalized binomial via falling factorial
  BigInt num = 1;
  for (unsigned i = 0; i < k; ++i) num *= BigInt(n - static_cast<long>(i));
  return num / factorial(k);
}

TEST(Bernoulli, SmallValues) {
  EXPECT_EQ(bernoulli_numbers(0), (std::vector<Rational>{q(1)}));
  EXPECT_EQ(bernoulli_numbers(2), (std::vector<Rational>{q(1), q(-1, 2), q(1, 6)}));
  const auto b4 = bernoulli_numbers(4);
  EXPECT_EQ(b4[3], 0);
  EXPECT_EQ(b4[4], q(-1, 30));
}

TEST(Bernoulli, MatchesSeriesInversionOracle) {
  EXPECT_EQ(bernoulli_numbers(60), bernoulli_by_series_inversion(60));
}

TEST(Bernoulli, OddIndicesVanish) {
  const auto b = bernoulli_numbers(41);
  for (std::size_t n = 3; n <= 41; n += 2) EXPECT_EQ(b[n], 0) << n;
}

TEST(Bernoulli, ConcurrentCacheIsTransparent) {
  std::vector<std::vector<Rational>> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] { results[i] = bernoulli_numbers(30 + 5 * i); });
  for (auto& t : threads) t.join();
  const auto reference = bernoulli_by_series_inversion(65);
  for (std::size_t i = 0; i < results.size(); ++i)
    for (std::size_t n = 0; n < results[i].size(); ++n) EXPECT_EQ(results[i][n], reference[n]);
}

TEST(BernoulliPoly, SmallDegrees) {
  EXPECT_EQ(bernoulli_poly(0), RationalPoly::constant(1));
  EXPECT_EQ(bernoulli_poly(1), RationalPoly({q(-1, 2), q(1)}));
  EXPECT_EQ(bernoulli_poly(2), RationalPoly({q(1, 6), q(-1), q(1)}));
}

TEST(BernoulliPoly, DerivativeAndDifferenceLaws) {
  for (unsigned n = 1; n <= 12; ++n) {
    const auto bn = bernoulli_poly(n);
    EXPECT_EQ(bn.derivative(), Rational(n) * bernoulli_poly(n - 1)) << n;
    EXPECT_EQ(bn.shifted(1) - bn, RationalPoly::monomial(Rational(n), n - 1)) << n;
    EXPECT_EQ(bn(Rational(0)), bernoulli_number(n));
  }
}

TEST(Stirling, Rows) {
  EXPECT_EQ(stirling_first_row(1), (std::vector<BigInt>{0, 1}));
  EXPECT_EQ(stirling_first_row(2), (std::vector<BigInt>{0, -1, 1}));
  EXPECT_EQ(stirling_first_row(3), (std::vector<BigInt>{0, 2, -3, 1}));
  EXPECT_THROW(stirling_first_row(0), std::invalid_argument);
}

TEST(Stirling, AbsoluteRowSumIsFactorial) {
  for (unsigned r = 1; r <= 12; ++r) {
    BigInt total = 0;
    for (const auto& s : stirling_first_row(r)) total += abs(s);
    EXPECT_EQ(total, factorial(r));
  }
}

TEST(Binom, Values) {
  EXPECT_EQ(binom_poly(0), RationalPoly::constant(1));
  EXPECT_EQ(binom_poly(1), RationalPoly::identity());
  EXPECT_EQ(binom_poly(3), RationalPoly({q(0), q(2, 6), q(-3, 6), q(1, 6)}));
}

TEST(Binom, AgreesWithIntegerBinomials) {
  for (unsigned r = 0; r <= 8; ++r)
    for (long n = -5; n <= 12; ++n) EXPECT_EQ(binom_poly(r)(Rational(n)), Rational(integer_binomial(n, r)));
}

TEST(Grj, Examples) {
  EXPECT_EQ(grj_poly(1, 0), RationalPoly::constant(1));
  for (unsigned r = 1; r <= 8; ++r) EXPECT_EQ(grj_poly(r, 0), binom_poly(r - 1));
  EXPECT_EQ(grj_poly(3, 1), RationalPoly({q(1, 2), q(-1)}));
  EXPECT_EQ(grj_poly(2, 1), RationalPoly::constant(-1));
}

TEST(Grj, DegreeLawAndVanishing) {
  for (unsigned r = 1; r <= 8; ++r) {
    for (unsigned j = 0; j < r; ++j) EXPECT_EQ(grj_poly(r, j).degree(), static_cast<int>(r - 1 - j));
    for (unsigned j = r; j < r + 3; ++j) EXPECT_TRUE(grj_poly(r, j).is_zero());
  }
}

TEST(Grj, GeneratingIdentityAtRandomRationalPoints) {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
  for (unsigned r = 1; r <= 8; ++r) {
    for (int trial = 0; trial < 20; ++trial) {
      const Rational z0 = q(num(rng), den(rng)), u0 = q(num(rng), den(rng));
      Rational lhs = 0, upow = 1;
      for (unsigned j = 0; j < r; ++j, upow *= u0) lhs += grj_poly(r, j)(z0) * upow;
      EXPECT_EQ(lhs, binom_poly(r - 1)(z0 - u0)) << "r=" << r;
    }
  }
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi_poly(1), RationalPoly({q(-1, 2), q(1)}));
  EXPECT_EQ(psi_poly(2), RationalPoly({q(5, 12), q(-1), q(1, 2)}));
  EXPECT_EQ(psi_poly(1)(q(1, 2)), 0);
  EXPECT_EQ(psi_poly(0), RationalPoly::constant(1));
}

TEST(Psi, DegreeIsR) {
  for (unsigned r = 1; r <= 8; ++r) EXPECT_EQ(psi_poly(r).degree(), static_cast<int>(r));
}

TEST(Q, Examples) {
  EXPECT_EQ(q_poly(1), RationalPoly({q(1, 2), q(-1)}));
  EXPECT_EQ(q_poly(2), RationalPoly({q(5, 12), q(-1), q(1, 2)}));
  const auto q3 = q_poly(3);
  EXPECT_EQ(Rational(-1) * q3.compose_affine(-1, 3), q3);
}

TEST(CompositionCounts, Examples) {
  EXPECT_EQ(composition_counts(2, 2), (std::vector<BigInt>{1, 2, 1}));
  EXPECT_EQ(composition_counts(3, 1), (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(composition_counts(3, 2), (std::vector<BigInt>{1, 2, 3, 2, 1}));
  EXPECT_EQ(composition_counts(5, 0), (std::vector<BigInt>{1}));
}

TEST(CompositionCounts, MatchesTupleEnumeration) {
  for (unsigned p = 1; p <= 4; ++p)
    for (unsigned r = 0; r <= 4; ++r) {
      std::vector<BigInt> brute(r * (p - 1) + 1, BigInt(0));
      unsigned total = 1;
      for (unsigned i = 0; i < r; ++i) total *= p;
      for (unsigned code = 0; code < total; ++code) {
        unsigned c = code, s = 0;
        for (unsigned i = 0; i < r; ++i, c /= p) s += c % p;
        brute[s] += 1;
      }
      EXPECT_EQ(composition_counts(p, r), brute) << "p=" << p << " r=" << r;
    }
}

TEST(Phi, RequiresResolvedConventions) {
  EXPECT_THROW(phi_rj_poly(1, 0, 2, ConventionSet{}), ConventionError);
}

TEST(Phi, Examples) {
  const auto conv = ConventionSet::resolved_with(-1, -1, -1);
  EXPECT_TRUE(phi_rj_poly(1, 0, 1, conv).is_zero());
  for (unsigned p = 1; p <= 5; ++p)
    EXPECT_EQ(phi_rj_poly(1, 0, p, conv), RationalPoly::constant(-Rational(p - 1)));
  EXPECT_EQ(phi_rj_poly(2, 1, 2, conv), RationalPoly::constant(3));
  EXPECT_EQ(phi_rj_poly(2, 1, 2, ConventionSet::resolved_with(1, -2, -1)), RationalPoly::constant(-3));
}

TEST(Phi, VanishesForPOneUnderUnitShift) {
  const auto conv = ConventionSet::resolved_with(-1, -1, -1);
  for (unsigned r = 1; r <= 6; ++r)
    for (unsigned j = 0; j < r; ++j) EXPECT_TRUE(phi_rj_poly(r, j, 1, conv).is_zero());
}

TEST(Phi, MatchesTupleEnumerationAtRationalPoints) {
  const auto conv = ConventionSet::resolved_with(-1, -2, 1);
  const unsigned r = 3, p = 3;
  for (unsigned j = 0; j < r; ++j) {
    const auto g = grj_poly(r, j);
    const auto phi = phi_rj_poly(r, j, p, conv);
    for (long zn : {-3, 1, 7}) {
      const Rational z = q(zn, 2);
      Rational sum = 0;
      for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b)
          for (unsigned c = 0; c < p; ++c) sum += g((z + Rational(a + b + c)) / Rational(p) - 2);
      EXPECT_EQ(phi(z), Rational(-1) * (sum - g(z - 1)));
    }
  }
}

TEST(DefiniteIntegral, Examples) {
  EXPECT_EQ(definite_integral_poly(RationalPoly::constant(1), 0), RationalPoly::identity());
  EXPECT_EQ(definite_integral_poly(RationalPoly::identity(), 0), RationalPoly::monomial(q(1, 2), 2));
  // (t^2 - t)/2 integrated from -1: z^3/6 - z^2/4 - (-1/6 - 1/4)
  EXPECT_EQ(definite_integral_poly(binom_poly(2), -1), RationalPoly({q(5, 12), q(0), q(-1, 4), q(1, 6)}));
}

TEST(DefiniteIntegral, DerivativeRecoversIntegrand) {
  for (unsigned r = 0; r <= 6; ++r) {
    const auto f = bernoulli_poly(r) + binom_poly(r);
    const auto F = definite_integral_poly(f, q(-3, 7));
    EXPECT_EQ(F.derivative(), f);
    EXPECT_EQ(F(q(-3, 7)), 0);
  }
}

TEST(BarnesDecomposition, SmallCases) {
  const auto d1 = barnes_decomposition(1);
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1[0], RationalPoly::constant(1));
  const auto d2 = barnes_decomposition(2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[1], RationalPoly::constant(1));
  EXPECT_EQ(d2[0], RationalPoly({q(1), q(-1)}));
}

TEST(BarnesDecomposition, ReproducesMultiplicities) {
  for (unsigned r = 1; r <= 6; ++r) {
    const auto a = barnes_decomposition(r);
    for (long zn : {1, 3, 7}) {
      const Rational z = q(zn, 4);
      for (long k = 0; k <= 6; ++k) {
        Rational x = Rational(k) + z, acc = 0, xp = 1;
        for (const auto& aj : a) {
          acc += aj(z) * xp;
          xp *= x;
        }
        EXPECT_EQ(acc, Rational(integer_binomial(k + r - 1, r - 1)));
      }
    }
  }
}

TEST(RationalParse, Forms) {
  EXPECT_EQ(parse_rational("3/6"), q(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), q(-1, 4));
  EXPECT_EQ(parse_rational("2.5e-1"), q(1, 4));
  EXPECT_EQ(parse_rational("12"), q(12));
  EXPECT_EQ(parse_rational("1e2"), q(100));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

}  // namespace
}  // namespace multigamma
