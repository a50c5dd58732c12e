#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oqf/grid.hpp"
#include "oqf/parallel.hpp"

namespace oqf {

/// F_app sampled at strictly increasing frequencies.
struct SpectrumSamples {
  std::vector<double> omegas;
  std::vector<Complex> values;
};

/// Quadrature error for the zero-extended monomial f_alpha on [a, b].
struct QuadratureErrorRecord {
  unsigned alpha;
  double omega;
  double a;
  double b;
  double h;
  Complex error;          // g_{alpha,omega}[-1, 1] - sum_beta C_beta f_alpha(x_beta)
  double abs_real_error;  // |Re error|
};

/// F_app(omega) = sum_beta C_{beta,-omega}[a, b] f(x_beta): the forward kernel
/// is exp(-2 pi i omega x), with f taken as zero outside [a, b].
/// Throws PreconditionError unless `omegas` is strictly increasing.
SpectrumSamples forward_transform(const SampledFunction& samples, std::span<const double> omegas,
                                  Parallelism par = {});

/// f_app(x) = sum_gamma C_{gamma,x}[a, b] F_app(omega_gamma) where `spectrum`
/// holds F_app on a uniform frequency grid over [a, b]. The evaluation point x
/// plays the role of the weight frequency; weights are rebuilt for every x.
std::vector<Complex> inverse_transform(const SampledFunction& spectrum, std::span<const double> xs,
                                       Parallelism par = {});

/// x^alpha on the closed interval [-1, 1], zero outside.
double truncated_monomial(unsigned alpha, double x);

/// Error of the optimal rule on [a, b] (which must contain [-1, 1]) for f_alpha,
/// alpha in {0, 1, 2}, with n subintervals.
QuadratureErrorRecord quadrature_error_monomial(unsigned alpha, double omega, double a, double b,
                                                std::size_t n);

/// Same error for the rectangle (DFT-style) sum h * sum_{beta < n} e(x_beta) f(x_beta).
/// Reported for comparison only.
Complex riemann_error_monomial(unsigned alpha, double omega, double a, double b, std::size_t n);

/// quadrature_error_monomial over omega_count equispaced frequencies in
/// [omega_min, omega_max]; rows are in lattice order regardless of `par`.
std::vector<QuadratureErrorRecord> error_sweep(unsigned alpha, double a, double b, std::size_t n,
                                               double omega_min, double omega_max,
                                               std::size_t omega_count, Parallelism par = {});

}  // namespace oqf
