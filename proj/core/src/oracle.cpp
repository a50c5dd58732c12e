#include "oqf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oqf/errors.hpp"

namespace oqf::oracle {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this |2 pi omega| the [0, 1] integrals are summed as power series;
// the closed forms divide by (2 pi omega)^2 and cancel badly near zero.
constexpr double kSeriesReach = 1.0;
constexpr int kSeriesTerms = 30;

Complex cis(double phase) { return Complex(std::cos(phase), std::sin(phase)); }

}  // namespace

Complex unit_integral(double omega) {
  const double w = kTwoPi * omega;
  if (std::abs(w) < kSeriesReach) {
    // sum_m z^m / (m + 1)!
    const Complex z(0.0, w);
    Complex term = 1.0, sum = 0.0;
    for (int m = 0; m < kSeriesTerms; ++m) {
      term = (m == 0) ? Complex(1.0) : term * z / static_cast<double>(m + 1);
      sum += term;
    }
    return sum;
  }
  const Complex z(0.0, w);
  return (cis(w) - 1.0) / z;
}

Complex unit_first_moment(double omega) {
  const double w = kTwoPi * omega;
  const Complex z(0.0, w);
  if (std::abs(w) < kSeriesReach) {
    // sum_m z^m / (m! (m + 2))
    Complex zm = 1.0, sum = 0.0;
    for (int m = 0; m < kSeriesTerms; ++m) {
      sum += zm / static_cast<double>(m + 2);
      zm *= z / static_cast<double>(m + 1);
    }
    return sum;
  }
  const Complex e = cis(w);
  return e / z - (e - 1.0) / (z * z);
}

Complex kernel_moment(double s, double omega) {
  const double w = kTwoPi * omega;
  const Complex z(0.0, w);
  if (std::abs(w) < kSeriesReach) {
    // (1/2) sum_m z^m / m! * integral_0^1 x^m |x - s| dx, where the inner
    // integral is 1/(m+2) - s/(m+1) + 2 s^(m+2) / ((m+1)(m+2)).
    Complex zm = 1.0, sum = 0.0;
    double sp = s * s;  // s^(m+2)
    for (int m = 0; m < kSeriesTerms; ++m) {
      const double m1 = m + 1.0, m2 = m + 2.0;
      const double moment = 1.0 / m2 - s / m1 + 2.0 * sp / (m1 * m2);
      sum += zm * moment;
      zm *= z / m1;
      sp *= s;
    }
    return 0.5 * sum;
  }
  // Split |x - s| at x = s and integrate each piece by parts.
  const Complex e1 = cis(w);
  const Complex es = cis(w * s);
  return -s * (e1 + 1.0) / (2.0 * z) + (2.0 * es + (z - 1.0) * e1 - 1.0) / (2.0 * z * z);
}

std::vector<Complex> solve_dense(std::vector<Complex> a, std::vector<Complex> rhs,
                                 std::size_t dim, double* condition_estimate) {
  if (a.size() != dim * dim || rhs.size() != dim) {
    throw DimensionError("dense solve: matrix/rhs shape does not match dimension");
  }
  double max_pivot = 0.0;
  double min_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(a[col * dim + col]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      const double v = std::abs(a[r * dim + col]);
      if (v > best) {
        best = v;
        pivot_row = r;
      }
    }
    max_pivot = std::max(max_pivot, best);
    min_pivot = std::min(min_pivot, best);
    if (best == 0.0 || best < 1e-14 * max_pivot) {
      const double cond = best == 0.0 ? std::numeric_limits<double>::infinity()
                                      : max_pivot / best;
      throw SolverError("dense solve: singular pivot in column " + std::to_string(col), cond);
    }
    if (pivot_row != col) {
      for (std::size_t c = 0; c < dim; ++c) std::swap(a[col * dim + c], a[pivot_row * dim + c]);
      std::swap(rhs[col], rhs[pivot_row]);
    }
    const Complex inv = 1.0 / a[col * dim + col];
    for (std::size_t r = col + 1; r < dim; ++r) {
      const Complex factor = a[r * dim + col] * inv;
      if (factor == Complex(0.0)) continue;
      a[r * dim + col] = 0.0;
      for (std::size_t c = col + 1; c < dim; ++c) a[r * dim + c] -= factor * a[col * dim + c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Complex> x(dim);
  for (std::size_t i = dim; i-- > 0;) {
    Complex acc = rhs[i];
    for (std::size_t c = i + 1; c < dim; ++c) acc -= a[i * dim + c] * x[c];
    x[i] = acc / a[i * dim + i];
  }
  if (condition_estimate != nullptr) *condition_estimate = max_pivot / min_pivot;
  return x;
}

CoefficientSystemSolution solve_coefficient_system(std::size_t n, double omega) {
  if (n < 1) throw PreconditionError("coefficient system requires n >= 1");
  if (!std::isfinite(omega)) throw PreconditionError("frequency must be finite");

  const std::size_t dim = n + 2;
  const double h = 1.0 / static_cast<double>(n);
  std::vector<Complex> a(dim * dim, Complex(0.0));
  std::vector<Complex> rhs(dim);
  for (std::size_t beta = 0; beta <= n; ++beta) {
    for (std::size_t gamma = 0; gamma <= n; ++gamma) {
      const double dist = std::abs(static_cast<double>(beta) - static_cast<double>(gamma)) * h;
      a[beta * dim + gamma] = 0.5 * dist;
    }
    a[beta * dim + (n + 1)] = 1.0;
    rhs[beta] = kernel_moment(h * static_cast<double>(beta), omega);
  }
  for (std::size_t gamma = 0; gamma <= n; ++gamma) a[(n + 1) * dim + gamma] = 1.0;
  rhs[n + 1] = unit_integral(omega);

  CoefficientSystemSolution out;
  const std::vector<Complex> x = solve_dense(a, rhs, dim, &out.condition_estimate);

  for (std::size_t r = 0; r < dim; ++r) {
    Complex acc = -rhs[r];
    for (std::size_t c = 0; c < dim; ++c) acc += a[r * dim + c] * x[c];
    out.residual = std::max(out.residual, std::abs(acc));
  }
  out.coefficients.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n + 1));
  out.p0 = x[n + 1];
  for (std::size_t gamma = 0; gamma <= n; ++gamma) {
    out.first_moment += out.coefficients[gamma] * (h * static_cast<double>(gamma));
  }
  out.first_moment_expected = unit_first_moment(omega);
  return out;
}

double kernel_double_integral(double omega) {
  // With u = x - y the double integral collapses to int_0^1 u (1 - u) cos(c u) du.
  const double c = kTwoPi * omega;
  if (std::abs(c) < 2.0) {
    // sum_k (-1)^k c^(2k) / ((2k)! (2k+2) (2k+3))
    const double c2 = c * c;
    double term = 1.0;  // (-1)^k c^(2k) / (2k)!
    double sum = 0.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
      sum += term / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
      term *= -c2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    }
    return sum;
  }
  return -(1.0 + std::cos(c)) / (c * c) + 2.0 * std::sin(c) / (c * c * c);
}

double error_norm_bruteforce(std::span<const double> re, std::span<const double> im,
                             double omega, std::size_t n) {
  if (re.size() != n + 1 || im.size() != n + 1) {
    throw DimensionError("brute-force norm needs n + 1 real and imaginary weights");
  }
  const double h = 1.0 / static_cast<double>(n);
  double double_sum = 0.0;
  for (std::size_t beta = 0; beta <= n; ++beta) {
    for (std::size_t gamma = 0; gamma <= n; ++gamma) {
      const double g = 0.5 * h * std::abs(static_cast<double>(beta) - static_cast<double>(gamma));
      double_sum += (re[beta] * re[gamma] + im[beta] * im[gamma]) * g;
    }
  }
  double cos_sum = 0.0;
  double sin_sum = 0.0;
  for (std::size_t beta = 0; beta <= n; ++beta) {
    const Complex m = kernel_moment(h * static_cast<double>(beta), omega);
    cos_sum += re[beta] * m.real();
    sin_sum += im[beta] * m.imag();
  }
  return -(double_sum - 2.0 * cos_sum - 2.0 * sin_sum + kernel_double_integral(omega));
}

DiscreteOperatorWindow discrete_operator(double h, int reach) {
  if (!(h > 0.0)) throw PreconditionError("discrete operator requires h > 0");
  if (reach < 1) throw PreconditionError("discrete operator reach must be >= 1");
  DiscreteOperatorWindow d{h, {}};
  const double inv_h2 = 1.0 / (h * h);
  for (int beta = -reach; beta <= reach; ++beta) {
    const int k = std::abs(beta);
    d.values[beta] = (k == 0) ? -2.0 * inv_h2 : (k == 1 ? inv_h2 : 0.0);
  }
  return d;
}

bool DiscreteIdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

DiscreteIdentityReport discrete_operator_identities(double h, int window, double tolerance) {
  if (window < 4) throw PreconditionError("identity window must be >= 4");
  const DiscreteOperatorWindow d = discrete_operator(h, window);
  const int span = window - 2;
  DiscreteIdentityReport report;

  double delta_dev = 0.0;
  double const_dev = 0.0;
  double linear_dev = 0.0;
  for (int beta = -span; beta <= span; ++beta) {
    double conv = 0.0;
    double ones = 0.0, ones_scale = 0.0;
    double lin = 0.0, lin_scale = 0.0;
    for (const auto& [gamma, dval] : d.values) {
      const double g = 0.5 * std::abs(h * static_cast<double>(beta - gamma));
      conv += h * dval * g;
      ones += dval;
      ones_scale += std::abs(dval);
      const double x = h * static_cast<double>(beta - gamma);
      lin += dval * x;
      lin_scale += std::abs(dval * x);
    }
    report.delta_convolution[beta] = conv;
    delta_dev = std::max(delta_dev, std::abs(conv - (beta == 0 ? 1.0 : 0.0)));
    const_dev = std::max(const_dev, ones_scale > 0 ? std::abs(ones) / ones_scale : 0.0);
    linear_dev = std::max(linear_dev, lin_scale > 0 ? std::abs(lin) / lin_scale : 0.0);
  }
  report.checks.push_back({"hD*G=delta", delta_dev, tolerance, delta_dev <= tolerance});
  report.checks.push_back({"D*1=0", const_dev, tolerance, const_dev <= tolerance});
  report.checks.push_back({"D*x=0", linear_dev, tolerance, linear_dev <= tolerance});
  return report;
}

std::vector<Complex> transform_to_interval(std::span<const Complex> coeffs01, double a, double b,
                                           double omega) {
  if (!(b > a)) throw PreconditionError("transform_to_interval requires b > a");
  const Complex scale = (b - a) * cis((kTwoPi * omega) * a);
  std::vector<Complex> out(coeffs01.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = scale * coeffs01[k];
  return out;
}

}  // namespace oqf::oracle
