#pragma once

// Optimal (Sard) quadrature for Fourier integrals
//
//     integral_a^b exp(2 pi i omega x) phi(x) dx  ~  sum_beta C_beta phi(x_beta)
//
// over equispaced nodes, optimal for phi in the Sobolev space L2^(1)[a, b].
// omega is measured in cycles per unit length throughout.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "oqf/grid.hpp"

namespace oqf {

/// The n + 1 weights C_{beta,omega}[a, b] for one grid/frequency pair.
struct OptimalCoefficients {
  UniformGrid grid;
  double omega;
  std::vector<Complex> values;
};

/// Squared norm of the optimal error functional and its square root.
struct ErrorNormReport {
  double omega;
  double h;
  double norm_sq;
  double norm;
};

/// g_{alpha,omega}[a, b] = integral_a^b exp(2 pi i omega x) x^alpha dx.
struct MonomialIntegral {
  unsigned alpha;
  double omega;
  double a;
  double b;
  Complex value;
};

/// Scale-free pieces of the weights, all functions of theta = 2 pi omega h:
///   C_0 = h * left  * e(a),  C_beta = h * interior * e(x_beta),  C_n = h * right * e(b)
/// with e(x) = exp(2 pi i omega x). At theta = 0 they reduce to 1/2, 1, 1/2.
struct WeightFactors {
  Complex left;
  double interior;
  Complex right;
};

/// Evaluates the factors without cancellation: a power series for |theta| < 1
/// and half-angle forms (1 - cos t = 2 sin^2(t/2)) elsewhere.
WeightFactors weight_factors(double theta) noexcept;

/// exp(2 pi i omega x), with the phase formed as (2 pi omega) * x so that
/// negating omega or x yields the exact conjugate.
Complex fourier_kernel(double omega, double x) noexcept;

/// Optimal weights on `grid` at frequency `omega`; the trapezoid rule at omega == 0.
OptimalCoefficients optimal_coefficients(const UniformGrid& grid, double omega);

/// Allocation-free variant writing grid.size() weights to `out`.
void fill_optimal_coefficients(const UniformGrid& grid, double omega, std::span<Complex> out);

/// Weights of the cosine-weighted rule (real parts of the optimal weights).
std::vector<double> cosine_coefficients(const UniformGrid& grid, double omega);

/// Weights of the sine-weighted rule (imaginary parts of the optimal weights).
std::vector<double> sine_coefficients(const UniformGrid& grid, double omega);

/// Closed-form squared norm of the optimal error functional for step h.
/// Depends on (omega, h) only, not on the interval position.
ErrorNormReport error_norm(double omega, double h);

/// sum_beta coeffs[beta] * samples[beta]. Throws DimensionError when the
/// grids differ.
Complex apply_quadrature(const OptimalCoefficients& coeffs, const SampledFunction& samples);

MonomialIntegral monomial_fourier_integral(unsigned alpha, double omega, double a, double b);

}  // namespace oqf
