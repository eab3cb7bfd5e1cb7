#include <hermite_kit/errors.hpp>
#include <hermite_kit/expansions.hpp>
#include <hermite_kit/hermite.hpp>

#include <oracles.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>

namespace hk = hermite_kit;
using hk::ExactPolynomial;
using hk::Rational;

namespace {

const double kRoot2Pi = std::sqrt(2.0 * std::numbers::pi);

double phi(double x) { return std::exp(-0.5 * x * x) / kRoot2Pi; }

}  // namespace

TEST(FourierHermite, StandardNormal) {
  const auto s = hk::fourier_hermite_coeffs(phi, 10);
  EXPECT_EQ(s.convention, hk::SeriesConvention::DensityWeighted);
  EXPECT_NEAR(s.coeffs[0], 1.0 / kRoot2Pi, 1e-15);
  for (unsigned n = 1; n <= 10; ++n) EXPECT_NEAR(s.coeffs[n], 0.0, 1e-15) << n;
}

TEST(FourierHermite, ShiftedMatchesClosedForm) {
  const auto s = hk::fourier_hermite_coeffs([](double x) { return phi(x - 0.5); }, 30);
  EXPECT_NEAR(s.coeffs[3], 0.125 / (6 * kRoot2Pi), 1e-15);
  const auto closed = hk::shifted_gaussian_series(0.5, 30);
  for (unsigned n = 0; n <= 30; ++n) EXPECT_NEAR(s.coeffs[n], closed.coeffs[n], 1e-14) << n;
}

TEST(FourierHermite, ZeroFunction) {
  const auto s = hk::fourier_hermite_coeffs([](double) { return 0.0; }, 5);
  for (double a : s.coeffs) EXPECT_EQ(a, 0.0);
}

TEST(FourierHermite, QuadOrderFloor) {
  EXPECT_THROW(hk::fourier_hermite_coeffs(phi, 10, 11), hk::InvalidArgument);
  EXPECT_NO_THROW(hk::fourier_hermite_coeffs(phi, 10, 12));
}

TEST(FourierHermite, RoundTrip) {
  for (double mu : {0.0, 0.5, 1.0}) {
    const auto s = hk::fourier_hermite_coeffs([mu](double x) { return phi(x - mu); }, 30);
    for (int i = 0; i < 20; ++i) {
      const double x = -4.0 + 8.0 * i / 19.0;
      EXPECT_NEAR(hk::evaluate_series(s, x), phi(x - mu), 1e-8) << mu << " " << x;
    }
  }
}

TEST(FourierHermite, Parseval) {
  const auto s = hk::fourier_hermite_coeffs([](double x) { return phi(x - 0.5); }, 40);
  double lhs = 0.0;
  for (unsigned n = 0; n <= 40; ++n) lhs += kRoot2Pi * std::tgamma(n + 1.0) * s.coeffs[n] * s.coeffs[n];
  // integral of f^2 e^{x^2/2}
  const double rhs =
      oracle::simpson([](double x) { return phi(x - 0.5) * phi(x - 0.5) * std::exp(0.5 * x * x); }, -30, 30, 60000);
  EXPECT_LE(oracle::relative_error(lhs, rhs), 1e-6);
}

TEST(EvaluateSeries, Examples) {
  const auto s = hk::shifted_gaussian_series(0.5, 30);
  EXPECT_NEAR(hk::evaluate_series(s, 0.5), 1.0 / kRoot2Pi, 1e-14);
  hk::HermiteSeries zero{hk::SeriesConvention::DensityWeighted, {0.0, 0.0, 0.0}};
  EXPECT_EQ(hk::evaluate_series(zero, 1.3), 0.0);
  hk::HermiteSeries unit{hk::SeriesConvention::DensityWeighted, {1.0}};
  EXPECT_EQ(hk::evaluate_series(unit, 0.0), 1.0);
  hk::HermiteSeries plain{hk::SeriesConvention::PlainRV, {1.0, 0.0, 1.0}};
  EXPECT_DOUBLE_EQ(hk::evaluate_series(plain, 3.0), 9.0);
}

TEST(GramCharlier, Examples) {
  hk::StandardizedMoments gauss{1.5, 2.0, {0.0, 3.0}};
  for (double x : {-2.0, 0.0, 1.5, 4.0}) {
    const auto d = hk::gram_charlier_density(gauss, x);
    EXPECT_DOUBLE_EQ(d.value, phi((x - 1.5) / 2.0) / 2.0);
    EXPECT_FALSE(d.negative);
  }
  EXPECT_DOUBLE_EQ(hk::gram_charlier_density({0.0, 1.0, {0.5, 3.0}}, 0.0).value, phi(0.0));
  EXPECT_DOUBLE_EQ(hk::gram_charlier_density({0.0, 1.0, {0.0, 4.0}}, 0.0).value, 1.125 * phi(0.0));
}

TEST(GramCharlier, NegativeValuesAreFlaggedNotClipped) {
  hk::StandardizedMoments skewed{0.0, 1.0, {2.0, 3.0}};
  const auto d = hk::gram_charlier_density(skewed, -3.0);  // 1 + (2/6) He_3(-3) = -5
  EXPECT_LT(d.value, 0.0);
  EXPECT_TRUE(d.negative);
}

TEST(GramCharlier, GenericPathAgreesWithClosedForm) {
  hk::StandardizedMoments m{0.3, 1.4, {0.4, 3.5}};
  const auto s = hk::gram_charlier_coeffs(m);
  for (double x : {-1.0, 0.0, 2.0}) {
    const double z = (x - m.mu) / m.sigma;
    EXPECT_NEAR(hk::evaluate_series(s, z) / m.sigma, hk::gram_charlier_density(m, x).value, 1e-15);
  }
  // higher orders route through the coefficients; the normal's own moments add nothing
  hk::StandardizedMoments normal6{0.0, 1.0, {0.0, 3.0, 0.0, 15.0}};
  EXPECT_NEAR(hk::gram_charlier_density(normal6, 0.7).value, phi(0.7), 1e-15);
}

TEST(GramCharlier, SigmaMustBePositive) {
  EXPECT_THROW(hk::gram_charlier_density({0.0, 0.0, {}}, 0.0), hk::InvalidArgument);
  EXPECT_THROW(hk::gram_charlier_coeffs({0.0, -1.0, {}}), hk::InvalidArgument);
}

TEST(GramCharlier, TailRatioDiagnostic) {
  hk::StandardizedMoments m{0.0, 1.0, {0.0, 9.0}};
  const auto s = hk::gram_charlier_coeffs(m);
  EXPECT_NEAR(hk::tail_coefficient_ratio(s), 6.0 / 24.0 / kRoot2Pi * std::sqrt(24.0), 1e-14);
}

TEST(MomentList, Parse) {
  const auto m = hk::parse_moment_list("# header\n0.5\n2\n\n0.1\n3.2\n");
  EXPECT_EQ(m.mu, 0.5);
  EXPECT_EQ(m.sigma, 2.0);
  EXPECT_EQ(m.nu, (std::vector<double>{0.1, 3.2}));
  EXPECT_EQ(m.standardized(4), 3.2);
  EXPECT_EQ(m.standardized(2), 1.0);
  try {
    hk::parse_moment_list("1\nabc\n");
    FAIL();
  } catch (const hk::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(hk::parse_moment_list("0\n-1\n"), hk::InvalidArgument);
}

TEST(WceOneDimensional, Examples) {
  const auto sq = hk::wce_coeffs_1d([](double y) { return y * y; }, 4);
  EXPECT_EQ(sq.convention, hk::SeriesConvention::PlainRV);
  const std::array<double, 5> sq_expected{1, 0, 1, 0, 0};
  for (unsigned n = 0; n <= 4; ++n) EXPECT_NEAR(sq.coeffs[n], sq_expected[n], 1e-13) << n;

  const auto one = hk::wce_coeffs_1d([](double) { return 1.0; }, 3);
  EXPECT_NEAR(one.coeffs[0], 1.0, 1e-14);
  for (unsigned n = 1; n <= 3; ++n) EXPECT_NEAR(one.coeffs[n], 0.0, 1e-14);

  const auto cube = hk::wce_coeffs_1d([](double y) { return y * y * y; }, 5);
  const std::array<double, 6> cube_expected{0, 3, 0, 1, 0, 0};
  for (unsigned n = 0; n <= 5; ++n) EXPECT_NEAR(cube.coeffs[n], cube_expected[n], 1e-13) << n;
}

TEST(WceOneDimensional, RejectsNonFinite) {
  EXPECT_THROW(hk::wce_coeffs_1d([](double y) { return y == 0.0 ? INFINITY : 1.0; }, 2, 5), hk::EvaluationError);
}

TEST(WceMulti, ConstantAndProduct) {
  const auto one = hk::wce_coeffs_multi([](std::span<const double>) { return 1.0; }, 2, 3);
  EXPECT_NEAR(one.ranks[0][0], 1.0, 1e-14);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i < one.ranks[n].size(); ++i) EXPECT_NEAR(one.ranks[n][i], 0.0, 1e-14);

  const auto prod = hk::wce_coeffs_multi([](std::span<const double> y) { return y[0] * y[1]; }, 2, 2);
  const std::array<std::size_t, 2> i12{0, 1}, i21{1, 0}, i11{0, 0}, i22{1, 1};
  EXPECT_NEAR(prod.ranks[2].at(i12), 0.5, 1e-14);
  EXPECT_NEAR(prod.ranks[2].at(i21), 0.5, 1e-14);
  EXPECT_NEAR(prod.ranks[2].at(i11), 0.0, 1e-14);
  EXPECT_NEAR(prod.ranks[2].at(i22), 0.0, 1e-14);
}

TEST(WceMulti, SquareOfFirstCoordinate) {
  // x1^2 = He_(11) + 1 and the double contraction sees b_11 once, so b_11 = 1.
  const auto sq = hk::wce_coeffs_multi([](std::span<const double> y) { return y[0] * y[0]; }, 2, 2);
  const std::array<std::size_t, 2> i11{0, 0};
  EXPECT_NEAR(sq.ranks[0][0], 1.0, 1e-14);
  EXPECT_NEAR(sq.ranks[2].at(i11), 1.0, 1e-14);
  const std::array<double, 2> x{1.7, -0.4};
  EXPECT_NEAR(hk::evaluate_wce(sq, x), 1.7 * 1.7, 1e-12);
}

TEST(WceMulti, ReconstructsAllMonomialsOfDegreeFour) {
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b) {
      const auto f = [a, b](std::span<const double> y) { return std::pow(y[0], a) * std::pow(y[1], b); };
      const auto coeffs = hk::wce_coeffs_multi(f, 2, 4);
      for (const auto& t : coeffs.ranks) EXPECT_LE(t.symmetry_defect(), 1e-9);
      for (double x1 : {-1.3, 0.0, 0.8, 2.2})
        for (double x2 : {-0.6, 1.1}) {
          const std::array<double, 2> x{x1, x2};
          EXPECT_NEAR(hk::evaluate_wce(coeffs, x), f(x), 1e-8) << a << " " << b;
        }
    }
}

TEST(WceMulti, BudgetExceeded) {
  EXPECT_THROW(hk::wce_coeffs_multi([](std::span<const double>) { return 1.0; }, 3, 4, 20, 1000),
               hk::BudgetExceeded);
}

TEST(Deconvolve, Examples) {
  EXPECT_EQ(hk::gaussian_mixture_deconvolve(ExactPolynomial({1}), 1), ExactPolynomial({1}));
  EXPECT_EQ(hk::gaussian_mixture_deconvolve(ExactPolynomial({0, 0, 1}), 1), ExactPolynomial({-1, 0, 1}));
  EXPECT_EQ(hk::gaussian_mixture_deconvolve(ExactPolynomial({0, 0, 0, 1}), 2), ExactPolynomial({0, -12, 0, 1}));
  EXPECT_THROW(hk::gaussian_mixture_deconvolve(ExactPolynomial({1}), 0), hk::InvalidArgument);
}

TEST(Deconvolve, MatchesScaledHermite) {
  for (unsigned n = 0; n <= 10; ++n)
    for (const Rational sigma : {Rational(1, 2), Rational(1), Rational(2), Rational(3, 7)}) {
      const auto f = hk::gaussian_mixture_deconvolve(ExactPolynomial::monomial(n), sigma);
      // sigma^n He_n(x / sigma)
      Rational sn = 1;
      for (unsigned k = 0; k < n; ++k) sn *= sigma;
      const auto expected = hk::hermite_explicit(n).scale_argument(1 / sigma) * sn;
      EXPECT_EQ(f, expected) << n;
    }
}

TEST(Deconvolve, SmoothingRecoversInput) {
  for (unsigned k = 0; k <= 8; ++k)
    for (double sigma : {0.5, 1.0, 2.0}) {
      const auto f = hk::gaussian_mixture_deconvolve(ExactPolynomial::monomial(k), hk::parse_rational(std::to_string(sigma)));
      for (double y : {-2.0, 0.0, 1.0, 3.0}) {
        const double smoothed = oracle::gaussian_smoothing([&](double x) { return f.evaluate(x); }, y, sigma);
        const double g = std::pow(y, k);
        if (g == 0.0) {
          EXPECT_NEAR(smoothed, 0.0, 1e-8 * std::pow(sigma, k) * std::sqrt(std::tgamma(k + 1.0)));
        } else {
          EXPECT_LE(oracle::relative_error(smoothed, g), 1e-8) << k << " " << sigma << " " << y;
        }
      }
    }
}

TEST(Deconvolve, TruncatedSeries) {
  const auto f = hk::gaussian_mixture_deconvolve(ExactPolynomial({0, 0, 0, 0, 1}), 1, 1);
  EXPECT_EQ(f, ExactPolynomial({0, 0, -6, 0, 1}));
}

TEST(FourierEigen, Examples) {
  const std::array<double, 1> origin{0.0};
  EXPECT_LE(hk::fourier_eigen_check(0, origin, 20), 1e-14);
  const std::array<double, 5> grid{-2, -1, 0, 1, 2};
  EXPECT_LE(hk::fourier_eigen_check(1, grid, 40), 1e-8);
  EXPECT_LE(hk::fourier_eigen_check(4, grid, 40), 1e-7);
  EXPECT_THROW(hk::fourier_eigen_check(8, grid, 25), hk::InvalidArgument);
}

TEST(FourierEigen, AllOrdersUpToEight) {
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(-3.0 + 0.1 * i);
  for (unsigned n = 0; n <= 8; ++n) EXPECT_LE(hk::fourier_eigen_check(n, grid, 60), 1e-6) << n;
}

TEST(Convention, Names) {
  EXPECT_EQ(hk::parse_convention(hk::to_string(hk::SeriesConvention::PlainRV)), hk::SeriesConvention::PlainRV);
  EXPECT_THROW(hk::parse_convention("other"), hk::InvalidArgument);
}
