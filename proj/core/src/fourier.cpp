#include "oqf/fourier.hpp"

#include <cmath>
#include <string>

#include "oqf/errors.hpp"
#include "oqf/quadrature.hpp"

namespace oqf {
namespace {

void require_increasing(std::span<const double> values, const char* what) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!std::isfinite(values[k])) {
      throw PreconditionError(std::string(what) + " must be finite");
    }
    if (k > 0 && !(values[k] > values[k - 1])) {
      throw PreconditionError(std::string(what) + " must be strictly increasing (index " +
                              std::to_string(k) + ")");
    }
  }
}

}  // namespace

SpectrumSamples forward_transform(const SampledFunction& samples, std::span<const double> omegas,
                                  Parallelism par) {
  require_increasing(omegas, "frequencies");
  SpectrumSamples out{std::vector<double>(omegas.begin(), omegas.end()),
                      std::vector<Complex>(omegas.size())};
  parallel_for(omegas.size(), par, [&](std::size_t k) {
    std::vector<Complex> c(samples.grid.size());
    fill_optimal_coefficients(samples.grid, -omegas[k], c);
    Complex sum = 0.0;
    for (std::size_t beta = 0; beta < c.size(); ++beta) sum += c[beta] * samples.values[beta];
    out.values[k] = sum;
  });
  return out;
}

std::vector<Complex> inverse_transform(const SampledFunction& spectrum, std::span<const double> xs,
                                       Parallelism par) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw PreconditionError("evaluation points must be finite");
  }
  std::vector<Complex> out(xs.size());
  parallel_for(xs.size(), par, [&](std::size_t k) {
    std::vector<Complex> c(spectrum.grid.size());
    fill_optimal_coefficients(spectrum.grid, xs[k], c);
    Complex sum = 0.0;
    for (std::size_t gamma = 0; gamma < c.size(); ++gamma) sum += c[gamma] * spectrum.values[gamma];
    out[k] = sum;
  });
  return out;
}

double truncated_monomial(unsigned alpha, double x) {
  if (x < -1.0 || x > 1.0) return 0.0;
  double v = 1.0;
  for (unsigned k = 0; k < alpha; ++k) v *= x;
  return v;
}

namespace {

void require_monomial_setup(unsigned alpha, double a, double b) {
  if (alpha > 2) throw PreconditionError("monomial error harness supports alpha in {0, 1, 2}");
  if (!(a <= -1.0 && b >= 1.0)) {
    throw PreconditionError("integration interval must contain [-1, 1]");
  }
}

}  // namespace

QuadratureErrorRecord quadrature_error_monomial(unsigned alpha, double omega, double a, double b,
                                                std::size_t n) {
  require_monomial_setup(alpha, a, b);
  const UniformGrid grid(a, b, n);
  std::vector<Complex> c(grid.size());
  fill_optimal_coefficients(grid, omega, c);
  Complex sum = 0.0;
  for (std::size_t beta = 0; beta < c.size(); ++beta) {
    const double f = truncated_monomial(alpha, grid.node(beta));
    if (f != 0.0) sum += c[beta] * f;
  }
  const Complex exact = monomial_fourier_integral(alpha, omega, -1.0, 1.0).value;
  const Complex err = exact - sum;
  return {alpha, omega, a, b, grid.h(), err, std::abs(err.real())};
}

Complex riemann_error_monomial(unsigned alpha, double omega, double a, double b, std::size_t n) {
  require_monomial_setup(alpha, a, b);
  const UniformGrid grid(a, b, n);
  Complex sum = 0.0;
  for (std::size_t beta = 0; beta < grid.n(); ++beta) {
    const double x = grid.node(beta);
    const double f = truncated_monomial(alpha, x);
    if (f != 0.0) sum += fourier_kernel(omega, x) * f;
  }
  return monomial_fourier_integral(alpha, omega, -1.0, 1.0).value - grid.h() * sum;
}

std::vector<QuadratureErrorRecord> error_sweep(unsigned alpha, double a, double b, std::size_t n,
                                               double omega_min, double omega_max,
                                               std::size_t omega_count, Parallelism par) {
  require_monomial_setup(alpha, a, b);
  const std::vector<double> omegas = linspace(omega_min, omega_max, omega_count);
  std::vector<QuadratureErrorRecord> rows(omegas.size());
  parallel_for(omegas.size(), par, [&](std::size_t k) {
    rows[k] = quadrature_error_monomial(alpha, omegas[k], a, b, n);
  });
  return rows;
}

}  // namespace oqf
