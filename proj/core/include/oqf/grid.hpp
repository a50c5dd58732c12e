#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace oqf {

using Complex = std::complex<double>;

/// Equispaced nodes a = x_0 < x_1 < ... < x_n = b with step h = (b - a) / n.
///
/// Only (a, b, n) are stored; the step is always recomputed from them.
class UniformGrid {
 public:
  /// Throws PreconditionError unless b > a, n >= 1 and both ends are finite.
  UniformGrid(double a, double b, std::size_t n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }
  double h() const noexcept { return (b_ - a_) / static_cast<double>(n_); }
  double length() const noexcept { return b_ - a_; }

  /// x_beta = a + h beta. Endpoints are exact. Interior nodes are formed as
  /// ((n - beta) a + beta b) / n, which hits "round" nodes exactly (+-1 on
  /// [-10, 10] with n = 200) and makes node(n - beta) == -node(beta) bit for
  /// bit when a == -b.
  double node(std::size_t beta) const;

  std::vector<double> nodes() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
};

/// Complex samples phi(x_beta) of a function on a UniformGrid.
struct SampledFunction {
  SampledFunction(UniformGrid grid, std::vector<Complex> values);

  template <typename F>
  static SampledFunction from_function(const UniformGrid& grid, F&& f) {
    std::vector<Complex> values(grid.size());
    for (std::size_t beta = 0; beta < values.size(); ++beta) {
      values[beta] = Complex(f(grid.node(beta)));
    }
    return SampledFunction(grid, std::move(values));
  }

  UniformGrid grid;
  std::vector<Complex> values;
};

/// `count` equispaced values from `lo` to `hi`, both endpoints included exactly.
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace oqf
