#pragma once

// Independent checks of the closed-form weights on [0, 1]: the bordered
// linear system they solve, the raw error-norm quadratic form, and the
// three-point discrete second-difference operator used to invert it.
//
// Nothing in here calls into quadrature.hpp's weight formulas.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "oqf/grid.hpp"

namespace oqf::oracle {

struct CoefficientSystemSolution {
  std::vector<Complex> coefficients;  // C_gamma on [0, 1], gamma = 0..n
  Complex p0;                         // Lagrange multiplier of the exactness row
  double residual = 0.0;              // max |A x - rhs| over all rows
  double condition_estimate = 0.0;    // max |pivot| / min |pivot|
  Complex first_moment;               // sum_gamma C_gamma * h * gamma
  Complex first_moment_expected;      // integral_0^1 exp(2 pi i omega x) x dx
};

/// integral_0^1 exp(2 pi i omega x) |x - s| / 2 dx (right-hand side of the
/// stationarity rows). The omega == 0 limit is s^2/2 - s/2 + 1/4.
Complex kernel_moment(double s, double omega);

/// integral_0^1 exp(2 pi i omega x) dx.
Complex unit_integral(double omega);

/// integral_0^1 exp(2 pi i omega x) x dx.
Complex unit_first_moment(double omega);

/// Dense complex Gaussian elimination with partial pivoting on a row-major
/// dim x dim matrix. Throws SolverError on a zero or tiny relative pivot.
std::vector<Complex> solve_dense(std::vector<Complex> matrix, std::vector<Complex> rhs,
                                 std::size_t dim, double* condition_estimate = nullptr);

/// Assembles and solves the (n + 2) x (n + 2) bordered system
///   sum_gamma C_gamma G(h beta - h gamma) + p0 = kernel_moment(h beta),  beta = 0..n
///   sum_gamma C_gamma = unit_integral(omega)
/// with G(x) = |x| / 2 and h = 1 / n.
CoefficientSystemSolution solve_coefficient_system(std::size_t n, double omega);

/// integral_0^1 integral_0^1 cos(2 pi omega (x - y)) |x - y| / 2 dx dy.
double kernel_double_integral(double omega);

/// Squared error-functional norm on [0, 1] for arbitrary weights, evaluated
/// from the raw quadratic form (double sum, two single sums, double integral).
/// Meaningful as a norm only for weights that integrate constants exactly.
double error_norm_bruteforce(std::span<const double> coeffs_real,
                             std::span<const double> coeffs_imag, double omega, std::size_t n);

/// D(h beta) for |beta| <= reach: 1/h^2 * {-2 at 0, 1 at +-1, 0 beyond}.
struct DiscreteOperatorWindow {
  double h;
  std::map<int, double> values;
};

DiscreteOperatorWindow discrete_operator(double h, int reach);

struct IdentityCheck {
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed;
};

struct DiscreteIdentityReport {
  std::vector<IdentityCheck> checks;
  /// (h D * G)(h beta) for each tested offset; should be the discrete delta.
  std::map<int, double> delta_convolution;

  bool all_passed() const;
};

/// Checks h D * G = delta, D * 1 = 0 and D * (h beta) = 0 for |beta| <= window - 2.
/// The polynomial identities are measured relative to the sum of absolute
/// terms, so the reported deviation does not grow like beta / h.
DiscreteIdentityReport discrete_operator_identities(double h, int window, double tolerance = 1e-14);

/// Maps weights computed on [0, 1] at frequency omega (b - a) to [a, b] at
/// frequency omega: multiplies by (b - a) exp(2 pi i omega a).
std::vector<Complex> transform_to_interval(std::span<const Complex> coeffs01, double a, double b,
                                           double omega);

}  // namespace oqf::oracle
