#include "oqf/grid.hpp"

#include <cmath>
#include <string>

#include "oqf/errors.hpp"

namespace oqf {

UniformGrid::UniformGrid(double a, double b, std::size_t n) : a_(a), b_(b), n_(n) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw PreconditionError("grid endpoints must be finite");
  }
  if (!(b > a)) {
    throw PreconditionError("grid requires b > a, got a=" + std::to_string(a) +
                            " b=" + std::to_string(b));
  }
  if (n < 1) {
    throw PreconditionError("grid requires n >= 1");
  }
}

double UniformGrid::node(std::size_t beta) const {
  if (beta == 0) return a_;
  if (beta == n_) return b_;
  const double nb = static_cast<double>(n_);
  const double k = static_cast<double>(beta);
  return ((nb - k) * a_ + k * b_) / nb;
}

std::vector<double> UniformGrid::nodes() const {
  std::vector<double> out(size());
  for (std::size_t beta = 0; beta < out.size(); ++beta) out[beta] = node(beta);
  return out;
}

SampledFunction::SampledFunction(UniformGrid g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.size()) {
    throw DimensionError("sampled function has " + std::to_string(values.size()) +
                         " values for a grid of " + std::to_string(grid.size()) + " nodes");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) {
    throw PreconditionError("linspace requires count >= 2");
  }
  if (!(hi > lo)) {
    throw PreconditionError("linspace requires hi > lo");
  }
  std::vector<double> out(count);
  const double denom = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    const double kk = static_cast<double>(k);
    out[k] = ((denom - kk) * lo + kk * hi) / denom;
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace oqf
