#include "oqf/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "oqf/errors.hpp"

namespace oqf {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this |theta| the weight factors come from their Taylor series.
constexpr double kSeriesThreshold = 1.0;

constexpr std::array<double, 32> inverse_factorials() {
  std::array<double, 32> out{};
  double f = 1.0;
  out[0] = 1.0;
  for (std::size_t k = 1; k < out.size(); ++k) {
    f *= static_cast<double>(k);
    out[k] = 1.0 / f;
  }
  return out;
}

constexpr auto kInvFact = inverse_factorials();

// (exp(z) - 1 - z) / z^2 = sum_k z^k / (k + 2)!  at z = i theta.
Complex left_factor_series(double theta) {
  constexpr int kTerms = 20;
  const Complex z(0.0, theta);
  Complex acc = kInvFact[kTerms + 1];
  for (int k = kTerms - 1; k >= 0; --k) {
    acc = acc * z + kInvFact[k + 2];
  }
  return acc;
}

// 2 (1 - cos t) / t^2 = sum_k (-1)^k 2 t^(2k) / (2k + 2)!
double interior_factor_series(double theta) {
  constexpr int kTerms = 12;
  const double t2 = theta * theta;
  double acc = 0.0;
  for (int k = kTerms; k >= 0; --k) {
    const double c = 2.0 * kInvFact[2 * k + 2];
    acc = acc * t2 + ((k % 2 == 0) ? c : -c);
  }
  return acc;
}

// (1 - 2 (1 - cos t) / t^2) / t^2 = sum_k (-1)^k 2 t^(2k) / (2k + 4)!
double norm_factor_series(double theta) {
  constexpr int kTerms = 12;
  const double t2 = theta * theta;
  double acc = 0.0;
  for (int k = kTerms; k >= 0; --k) {
    const double c = 2.0 * kInvFact[2 * k + 4];
    acc = acc * t2 + ((k % 2 == 0) ? c : -c);
  }
  return acc;
}

double interior_factor(double theta) {
  if (std::abs(theta) < kSeriesThreshold) return interior_factor_series(theta);
  const double half = 0.5 * theta;
  const double sinc = std::sin(half) / half;
  return sinc * sinc;
}

void check_finite(double omega) {
  if (!std::isfinite(omega)) throw PreconditionError("frequency must be finite");
}

}  // namespace

WeightFactors weight_factors(double theta) noexcept {
  if (theta == 0.0) return {Complex(0.5, 0.0), 1.0, Complex(0.5, 0.0)};
  Complex left;
  if (std::abs(theta) < kSeriesThreshold) {
    left = left_factor_series(theta);
  } else {
    const double s = std::sin(0.5 * theta);
    const double t2 = theta * theta;
    left = Complex(2.0 * s * s / t2, (theta - std::sin(theta)) / t2);
  }
  return {left, interior_factor(theta), std::conj(left)};
}

Complex fourier_kernel(double omega, double x) noexcept {
  const double phase = (kTwoPi * omega) * x;
  return Complex(std::cos(phase), std::sin(phase));
}

void fill_optimal_coefficients(const UniformGrid& grid, double omega, std::span<Complex> out) {
  check_finite(omega);
  if (out.size() != grid.size()) {
    throw DimensionError("output span has " + std::to_string(out.size()) +
                         " slots for a grid of " + std::to_string(grid.size()) + " nodes");
  }
  const double h = grid.h();
  const std::size_t n = grid.n();
  if (omega == 0.0) {
    for (std::size_t beta = 0; beta <= n; ++beta) out[beta] = Complex(h, 0.0);
    out[0] = Complex(0.5 * h, 0.0);
    out[n] = Complex(0.5 * h, 0.0);
    return;
  }
  const WeightFactors f = weight_factors(kTwoPi * omega * h);
  const double interior = h * f.interior;
  for (std::size_t beta = 1; beta < n; ++beta) {
    out[beta] = interior * fourier_kernel(omega, grid.node(beta));
  }
  out[0] = h * f.left * fourier_kernel(omega, grid.a());
  out[n] = h * f.right * fourier_kernel(omega, grid.b());
}

OptimalCoefficients optimal_coefficients(const UniformGrid& grid, double omega) {
  OptimalCoefficients c{grid, omega, std::vector<Complex>(grid.size())};
  fill_optimal_coefficients(grid, omega, c.values);
  return c;
}

std::vector<double> cosine_coefficients(const UniformGrid& grid, double omega) {
  check_finite(omega);
  std::vector<double> out(grid.size());
  if (grid.a() != 0.0 || grid.b() != 1.0 || omega == 0.0) {
    const auto c = optimal_coefficients(grid, omega);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c.values[k].real();
    return out;
  }
  // Unit interval: the real-part closed forms directly.
  const double h = grid.h();
  const std::size_t n = grid.n();
  const double theta = kTwoPi * omega * h;
  const WeightFactors f = weight_factors(theta);
  const double one_minus_cos = f.left.real();    // (1 - cos t) / t^2
  const double t_minus_sin = f.left.imag();      // (t - sin t) / t^2
  out[0] = h * one_minus_cos;
  for (std::size_t beta = 1; beta < n; ++beta) {
    out[beta] = h * f.interior * std::cos(kTwoPi * omega * grid.node(beta));
  }
  const double c1 = std::cos(kTwoPi * omega);
  const double s1 = std::sin(kTwoPi * omega);
  out[n] = h * (one_minus_cos * c1 + t_minus_sin * s1);
  return out;
}

std::vector<double> sine_coefficients(const UniformGrid& grid, double omega) {
  check_finite(omega);
  std::vector<double> out(grid.size());
  if (grid.a() != 0.0 || grid.b() != 1.0 || omega == 0.0) {
    const auto c = optimal_coefficients(grid, omega);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = c.values[k].imag();
    return out;
  }
  const double h = grid.h();
  const std::size_t n = grid.n();
  const double theta = kTwoPi * omega * h;
  const WeightFactors f = weight_factors(theta);
  const double one_minus_cos = f.left.real();
  const double t_minus_sin = f.left.imag();
  out[0] = h * t_minus_sin;
  for (std::size_t beta = 1; beta < n; ++beta) {
    out[beta] = h * f.interior * std::sin(kTwoPi * omega * grid.node(beta));
  }
  const double c1 = std::cos(kTwoPi * omega);
  const double s1 = std::sin(kTwoPi * omega);
  out[n] = h * (one_minus_cos * s1 - t_minus_sin * c1);
  return out;
}

ErrorNormReport error_norm(double omega, double h) {
  check_finite(omega);
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw PreconditionError("error_norm requires h > 0");
  }
  double norm_sq = 0.0;
  if (omega == 0.0) {
    norm_sq = h * h / 12.0;
  } else {
    const double theta = kTwoPi * omega * h;
    if (std::abs(theta) < kSeriesThreshold) {
      norm_sq = h * h * norm_factor_series(theta);
    } else {
      const double w = kTwoPi * omega;
      norm_sq = (1.0 - interior_factor(theta)) / (w * w);
    }
  }
  return {omega, h, norm_sq, std::sqrt(norm_sq)};
}

Complex apply_quadrature(const OptimalCoefficients& coeffs, const SampledFunction& samples) {
  if (!(coeffs.grid == samples.grid)) {
    throw DimensionError("coefficients and samples live on different grids");
  }
  Complex sum = 0.0;
  for (std::size_t k = 0; k < coeffs.values.size(); ++k) {
    sum += coeffs.values[k] * samples.values[k];
  }
  return sum;
}

MonomialIntegral monomial_fourier_integral(unsigned alpha, double omega, double a, double b) {
  check_finite(omega);
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw PreconditionError("monomial integral requires finite b > a");
  }
  MonomialIntegral out{alpha, omega, a, b, Complex()};
  const double p = static_cast<double>(alpha) + 1.0;
  if (omega == 0.0) {
    out.value = Complex((std::pow(b, p) - std::pow(a, p)) / p, 0.0);
    return out;
  }

  const double w = kTwoPi * omega;
  const double reach = std::abs(w) * std::max(std::abs(a), std::abs(b));
  if (reach <= 4.0) {
    // Small |omega x|: expand the exponential, sum_m (i w)^m / m! * int x^(alpha+m).
    // The closed form below loses digits to 1/omega^(alpha+1) cancellation here.
    const Complex z(0.0, w);
    Complex zm = 1.0;
    Complex sum = 0.0;
    // Stop on a bound for the term, since odd moments vanish on symmetric intervals.
    const double big = std::max(std::abs(a), std::abs(b));
    for (unsigned m = 0; m < 200; ++m) {
      const double q = p + m;
      const double moment = (std::pow(b, q) - std::pow(a, q)) / q;
      sum += zm * moment;
      const double bound = std::abs(zm) * (b - a) * std::pow(big, q - 1.0);
      if (m > reach + 4.0 && bound <= 1e-18 * std::abs(sum)) break;
      zm *= z / static_cast<double>(m + 1);
    }
    out.value = sum;
    return out;
  }

  // Antiderivative exp(z x) * sum_{k=0}^{alpha} (-1)^k alpha!/(alpha-k)! x^(alpha-k) / z^(k+1),
  // accumulated Horner-style in x.
  const Complex inv_z = 1.0 / Complex(0.0, w);
  std::vector<Complex> coef(alpha + 1);
  {
    Complex wk = inv_z;        // z^-(k+1)
    double falling = 1.0;      // alpha! / (alpha - k)!
    for (unsigned k = 0; k <= alpha; ++k) {
      coef[k] = ((k % 2 == 0) ? 1.0 : -1.0) * falling * wk;
      falling *= static_cast<double>(alpha - k);
      wk *= inv_z;
    }
  }
  auto antiderivative = [&](double x) {
    Complex acc = coef[0];
    for (unsigned k = 1; k <= alpha; ++k) acc = acc * x + coef[k];
    return fourier_kernel(omega, x) * acc;
  };
  out.value = antiderivative(b) - antiderivative(a);
  return out;
}

}  // namespace oqf
