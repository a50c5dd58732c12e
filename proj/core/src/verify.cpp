#include "oqf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oqf/oracle.hpp"

namespace oqf {
namespace {

struct Accumulator {
  std::string name;
  double tolerance;
  double worst = 0.0;
  bool ok = true;

  void observe(double deviation) {
    if (!(deviation <= tolerance)) ok = false;  // NaN fails too
    worst = std::isnan(deviation) ? deviation : std::max(worst, deviation);
  }
  VerifyCheck finish() const { return {name, worst, tolerance, ok}; }
};

double max_abs_diff(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  double m = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k] - y[k]));
  return m;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

VerifyReport run_verification(VerifyLevel level, const CoefficientProvider& provider_in) {
  const CoefficientProvider provider =
      provider_in ? provider_in : CoefficientProvider(&optimal_coefficients);

  std::vector<std::size_t> sizes;
  for (std::size_t n = 2; n <= 32; ++n) sizes.push_back(n);
  if (level == VerifyLevel::full) {
    for (std::size_t n : {48, 64, 96, 128, 192, 256}) sizes.push_back(n);
  }
  const std::vector<double> omegas{0.1, 0.3, 1.0, 2.7, 5.0, 10.0};

  Accumulator equivalence{"oracle_equivalence", 1e-9};
  Accumulator multiplier{"oracle_p0_zero", 1e-10};
  Accumulator residual{"oracle_residual", 1e-10};
  Accumulator oracle_moment{"oracle_first_moment", 1e-10};
  Accumulator closed_moment{"closed_form_first_moment", 1e-10};

  for (std::size_t n : sizes) {
    const UniformGrid unit(0.0, 1.0, n);
    for (double omega : omegas) {
      const auto sol = oracle::solve_coefficient_system(n, omega);
      const auto closed = provider(unit, omega);
      equivalence.observe(max_abs_diff(closed.values, sol.coefficients));
      multiplier.observe(std::abs(sol.p0));
      residual.observe(sol.residual);
      const double scale = std::abs(sol.first_moment_expected);
      oracle_moment.observe(std::abs(sol.first_moment - sol.first_moment_expected) / scale);

      Complex moment = 0.0;
      for (std::size_t k = 0; k <= n; ++k) moment += closed.values[k] * unit.node(k);
      closed_moment.observe(std::abs(moment - sol.first_moment_expected) / scale);
    }
  }

  Accumulator norm_cross{"norm_closed_vs_bruteforce", 1e-9};
  for (std::size_t n : {4, 8, 16}) {
    for (double omega : {0.3, 1.0, 2.7}) {
      const UniformGrid unit(0.0, 1.0, n);
      const auto c = provider(unit, omega);
      std::vector<double> re(n + 1), im(n + 1);
      for (std::size_t k = 0; k <= n; ++k) {
        re[k] = c.values[k].real();
        im[k] = c.values[k].imag();
      }
      const double brute = oracle::error_norm_bruteforce(re, im, omega, n);
      norm_cross.observe(std::abs(brute - error_norm(omega, unit.h()).norm_sq));
    }
  }

  Accumulator trapezoid_norm{"trapezoid_norm_h2_over_12", 1e-13};
  Accumulator integer_norm{"integer_omega_h_norm", 1e-13};
  for (std::size_t n : {2, 5, 10, 40}) {
    const double h = 1.0 / static_cast<double>(n);
    const double expected = h * h / 12.0;
    trapezoid_norm.observe(std::abs(error_norm(0.0, h).norm_sq - expected) / expected);
    for (int k : {1, 2, 3}) {
      const double omega = k / h;
      const double w = 2.0 * std::numbers::pi * omega;
      const double target = 1.0 / (w * w);
      integer_norm.observe(std::abs(error_norm(omega, h).norm_sq - target) / target);
    }
  }

  const auto identities = oracle::discrete_operator_identities(0.1, 8);
  Accumulator discrete{"discrete_operator_identities", 1e-14};
  for (const auto& c : identities.checks) discrete.observe(c.max_deviation);

  Accumulator exact_const{"exactness_constant", 1e-12};
  Accumulator exact_linear{"exactness_linear", 1e-12};
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> pos(-5.0, 5.0), len(0.1, 10.0), freq(-20.0, 20.0);
  std::uniform_int_distribution<std::size_t> count(1, 200);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = pos(rng);
    const double b = a + len(rng);
    const UniformGrid grid(a, b, count(rng));
    const double omega = freq(rng);
    const auto c = provider(grid, omega);
    const Complex g0 = monomial_fourier_integral(0, omega, a, b).value;
    const Complex g1 = monomial_fourier_integral(1, omega, a, b).value;
    Complex s0 = 0.0, s1 = 0.0;
    double m0 = 0.0, m1 = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      s0 += c.values[k];
      s1 += c.values[k] * grid.node(k);
      m0 += std::abs(c.values[k]);
      m1 += std::abs(c.values[k] * grid.node(k));
    }
    // Relative to the larger of the target and the summed term magnitudes.
    exact_const.observe(std::abs(s0 - g0) / std::max(std::abs(g0), m0));
    exact_linear.observe(std::abs(s1 - g1) / std::max(std::abs(g1), m1));
  }

  VerifyReport report;
  for (const Accumulator* acc :
       {&equivalence, &multiplier, &residual, &oracle_moment, &closed_moment, &norm_cross,
        &trapezoid_norm, &integer_norm, &discrete, &exact_const, &exact_linear}) {
    report.checks.push_back(acc->finish());
  }
  return report;
}

}  // namespace oqf
