#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oqf/errors.hpp"
#include "oqf/oracle.hpp"
#include "oqf/quadrature.hpp"
#include "oracles.hpp"

namespace {

using oqf::Complex;
namespace orc = oqf::oracle;
constexpr double kPi = std::numbers::pi;

std::vector<double> re(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (auto c : v) out.push_back(c.real());
  return out;
}
std::vector<double> im(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (auto c : v) out.push_back(c.imag());
  return out;
}

TEST(KernelMoment, MatchesNumericIntegral) {
  for (double w : {0.0, 1e-7, 0.01, 0.1, 0.15, 0.2, 0.5, 1.0, 2.7, 10.0, -3.3}) {
    for (double s : {0.0, 0.125, 0.3, 0.5, 0.9, 1.0}) {
      const Complex got = orc::kernel_moment(s, w);
      const Complex want = oqf::testing::kernel_moment_numeric(s, w);
      EXPECT_LT(std::abs(got - want), 1e-14) << "s=" << s << " w=" << w;
    }
  }
}

TEST(KernelMoment, ZeroFrequencyLimit) {
  for (double s : {0.0, 0.25, 0.6, 1.0}) {
    EXPECT_NEAR(orc::kernel_moment(s, 0.0).real(), s * s / 2.0 - s / 2.0 + 0.25, 1e-16);
  }
}

TEST(UnitIntegrals, MatchNumeric) {
  for (double w : {0.0, 1e-9, 0.05, 0.3, 1.0, 6.5}) {
    EXPECT_LT(std::abs(orc::unit_integral(w) - oqf::testing::monomial_integral_numeric(0, w, 0, 1)),
              1e-14);
    EXPECT_LT(
        std::abs(orc::unit_first_moment(w) - oqf::testing::monomial_integral_numeric(1, w, 0, 1)),
        1e-14);
  }
}

TEST(SolveDense, SolvesAndReportsSingularity) {
  const std::vector<Complex> a{{2, 0}, {1, 1}, {0, -1}, {3, 0}};
  const std::vector<Complex> x{{1, 2}, {-0.5, 0.25}};
  const std::vector<Complex> b{a[0] * x[0] + a[1] * x[1], a[2] * x[0] + a[3] * x[1]};
  double cond = 0.0;
  const auto got = orc::solve_dense(a, b, 2, &cond);
  EXPECT_LT(std::abs(got[0] - x[0]), 1e-15);
  EXPECT_LT(std::abs(got[1] - x[1]), 1e-15);
  EXPECT_GE(cond, 1.0);

  const std::vector<Complex> singular{{1, 0}, {2, 0}, {2, 0}, {4, 0}};
  try {
    orc::solve_dense(singular, {1, 1}, 2);
    FAIL() << "expected SolverError";
  } catch (const oqf::SolverError& e) {
    EXPECT_TRUE(std::isinf(e.condition_estimate()) || e.condition_estimate() > 1e12);
  }
  EXPECT_THROW(orc::solve_dense(a, {1}, 2), oqf::DimensionError);
}

TEST(CoefficientSystem, TrapezoidAtZeroFrequency) {
  const auto s = orc::solve_coefficient_system(10, 0.0);
  EXPECT_LT(std::abs(s.p0), 1e-12);
  for (std::size_t k = 0; k <= 10; ++k) {
    const double want = (k == 0 || k == 10) ? 0.05 : 0.1;
    EXPECT_NEAR(s.coefficients[k].real(), want, 1e-13);
    EXPECT_NEAR(s.coefficients[k].imag(), 0.0, 1e-13);
  }
}

TEST(CoefficientSystem, MultiplierVanishesAndClosedFormAgrees) {
  const auto s = orc::solve_coefficient_system(8, 2.0);
  EXPECT_LT(std::abs(s.p0), 1e-10);
  EXPECT_LT(s.residual, 1e-10);
  const auto closed = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, 8), 2.0).values;
  for (std::size_t k = 0; k <= 8; ++k) EXPECT_LT(std::abs(s.coefficients[k] - closed[k]), 1e-10);
}

TEST(CoefficientSystem, EquivalenceMatrix) {
  for (std::size_t n = 2; n <= 32; ++n) {
    for (double w : {0.1, 0.3, 1.0, 2.7, 5.0, 10.0}) {
      const auto s = orc::solve_coefficient_system(n, w);
      const auto closed = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), w).values;
      for (std::size_t k = 0; k <= n; ++k) {
        ASSERT_LT(std::abs(s.coefficients[k] - closed[k]), 1e-9) << n << " " << w;
      }
      ASSERT_LT(std::abs(s.p0), 1e-10);
      ASSERT_LT(std::abs(s.first_moment - s.first_moment_expected),
                1e-10 * std::abs(s.first_moment_expected));
    }
  }
}

TEST(CoefficientSystem, FirstMomentIdentity) {
  for (double w : {0.2, 1.7, 4.0}) {
    const Complex z(0.0, 2.0 * kPi * w);
    const Complex expected = std::exp(z) / z - (std::exp(z) - 1.0) / (z * z);
    const auto s = orc::solve_coefficient_system(12, w);
    EXPECT_LT(std::abs(s.first_moment_expected - expected), 1e-14);
    EXPECT_LT(std::abs(s.first_moment - expected), 1e-10 * std::abs(expected));
  }
}

TEST(CoefficientSystem, LargeSystemsStayAccurate) {
  for (std::size_t n : {64u, 128u, 256u}) {
    const auto s = orc::solve_coefficient_system(n, 1.3);
    EXPECT_LT(s.residual, 1e-10);
    EXPECT_LT(std::abs(s.p0), 1e-10);
  }
}

TEST(CoefficientSystem, RejectsEmptyGrid) {
  EXPECT_THROW(orc::solve_coefficient_system(0, 1.0), oqf::PreconditionError);
}

TEST(KernelDoubleIntegral, MatchesNestedQuadrature) {
  for (double w : {0.0, 1e-4, 0.3, 1.0, 2.7, 9.0}) {
    // The integrand depends on u = x - y only: integral of (1 - |u|) cos(2 pi w u) |u| / 2.
    const double want =
        oqf::testing::integrate(
            [&](double u) {
              return Complex((1.0 - std::abs(u)) * std::cos(2.0 * kPi * w * u) * std::abs(u) / 2.0);
            },
            -1.0, 1.0, {0.0})
            .real();
    EXPECT_NEAR(orc::kernel_double_integral(w), want, 1e-15) << w;
  }
}

TEST(BruteForceNorm, TrapezoidGivesTwelfth) {
  for (std::size_t n : {1u, 3u, 10u, 40u}) {
    const auto c = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), 0.0).values;
    const double h = 1.0 / static_cast<double>(n);
    EXPECT_NEAR(orc::error_norm_bruteforce(re(c), im(c), 0.0, n), h * h / 12.0, 1e-15);
  }
}

TEST(BruteForceNorm, EqualsClosedForm) {
  for (std::size_t n : {4u, 8u, 10u, 16u}) {
    for (double w : {0.3, 1.0, 2.7}) {
      const auto c = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), w).values;
      const double closed = oqf::error_norm(w, 1.0 / static_cast<double>(n)).norm_sq;
      EXPECT_NEAR(orc::error_norm_bruteforce(re(c), im(c), w, n), closed, 1e-9);
    }
  }
}

TEST(BruteForceNorm, LengthMismatchThrows) {
  EXPECT_THROW(orc::error_norm_bruteforce(std::vector<double>(4), std::vector<double>(5), 1.0, 4),
               oqf::DimensionError);
}

// The quadratic form is minimised over weights that keep the constant
// exact, so perturbations are projected onto sum(delta) = 0.
TEST(BruteForceNorm, OptimalWeightsMinimiseConstrainedForm) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (double w : {0.3, 1.0, 2.7}) {
    const std::size_t n = 10;
    const auto c = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), w).values;
    const double base = orc::error_norm_bruteforce(re(c), im(c), w, n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> dr(n + 1), di(n + 1);
      double mr = 0.0, mi = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        dr[k] = gauss(rng);
        di[k] = gauss(rng);
        mr += dr[k];
        mi += di[k];
      }
      double len = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        dr[k] -= mr / static_cast<double>(n + 1);
        di[k] -= mi / static_cast<double>(n + 1);
        len += dr[k] * dr[k] + di[k] * di[k];
      }
      const double scale = 1e-2 / std::sqrt(len);
      auto pr = re(c), pi = im(c);
      for (std::size_t k = 0; k <= n; ++k) {
        pr[k] += scale * dr[k];
        pi[k] += scale * di[k];
      }
      EXPECT_GT(orc::error_norm_bruteforce(pr, pi, w, n), base) << w << " " << trial;
    }
  }
}

// With an unconstrained shift of C_0 alone the form is flat: the kernel |x|/2
// vanishes at the node itself and the multiplier is zero.
TEST(BruteForceNorm, UnconstrainedEndpointShiftIsFlat) {
  const std::size_t n = 10;
  const double w = 1.0;
  const auto c = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), w).values;
  const double base = orc::error_norm_bruteforce(re(c), im(c), w, n);
  auto pr = re(c);
  pr[0] += 0.01;
  EXPECT_NEAR(orc::error_norm_bruteforce(pr, im(c), w, n), base, 1e-12);
}

TEST(DiscreteOperator, WindowValues) {
  const auto d = orc::discrete_operator(0.1, 4);
  EXPECT_DOUBLE_EQ(d.values.at(0), -200.0);
  EXPECT_DOUBLE_EQ(d.values.at(1), 100.0);
  EXPECT_DOUBLE_EQ(d.values.at(-1), 100.0);
  for (int k : {-4, -3, -2, 2, 3, 4}) EXPECT_EQ(d.values.at(k), 0.0);
}

TEST(DiscreteOperator, Identities) {
  for (double h : {0.1, 0.25, 1.0 / 3.0, 0.01}) {
    const auto r = orc::discrete_operator_identities(h, 8);
    EXPECT_TRUE(r.all_passed()) << h;
    ASSERT_EQ(r.checks.size(), 3u);
    EXPECT_NEAR(r.delta_convolution.at(0), 1.0, 1e-14);
    EXPECT_NEAR(r.delta_convolution.at(3), 0.0, 1e-14);
    for (const auto& [beta, v] : r.delta_convolution) {
      EXPECT_NEAR(v, beta == 0 ? 1.0 : 0.0, 1e-14) << beta;
    }
  }
  EXPECT_THROW(orc::discrete_operator_identities(0.1, 3), oqf::PreconditionError);
  EXPECT_THROW(orc::discrete_operator_identities(0.0, 8), oqf::PreconditionError);
}

TEST(TransformToInterval, IdentityOnUnitInterval) {
  const auto c = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, 6), 1.7).values;
  const auto t = orc::transform_to_interval(c, 0.0, 1.0, 1.7);
  for (std::size_t k = 0; k < c.size(); ++k) EXPECT_LT(std::abs(t[k] - c[k]), 1e-16);
}

TEST(TransformToInterval, ScalesTrapezoid) {
  const std::size_t n = 8;
  const auto c = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), 0.0).values;
  const auto t = orc::transform_to_interval(c, -1.0, 1.0, 0.0);
  const double h = 2.0 / n;
  for (std::size_t k = 0; k <= n; ++k) {
    EXPECT_DOUBLE_EQ(t[k].real(), (k == 0 || k == n) ? h / 2.0 : h);
  }
}

TEST(TransformToInterval, MatchesDirectEvaluation) {
  for (auto [a, b, n, w] : {std::tuple{-1.0, 1.0, 8, 0.5}, {-3.0, 7.0, 25, 0.37}, {2.0, 2.5, 5, 9.0}}) {
    const double len = b - a;
    const auto unit = oqf::optimal_coefficients(oqf::UniformGrid(0.0, 1.0, n), w * len).values;
    const auto mapped = orc::transform_to_interval(unit, a, b, w);
    const auto direct = oqf::optimal_coefficients(oqf::UniformGrid(a, b, n), w).values;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      EXPECT_LT(std::abs(mapped[k] - direct[k]), 1e-12);
    }
  }
  EXPECT_THROW(orc::transform_to_interval(std::vector<Complex>(3), 1.0, 1.0, 0.0),
               oqf::PreconditionError);
}

}  // namespace
