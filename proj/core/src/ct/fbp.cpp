#include "oqf/ct/fbp.hpp"

#include <algorithm>
#include <cmath>

#include "oqf/errors.hpp"
#include "oqf/quadrature.hpp"

namespace oqf::ct {

FilterConfig resolve_filter(const FilterConfig& requested, const DetectorLattice& detector) {
  FilterConfig out = requested;
  if (out.band < 0.0 || !std::isfinite(out.band)) {
    throw PreconditionError("filter band must be positive");
  }
  if (out.band == 0.0) out.band = 0.5 / detector.dt;
  if (out.num_omega == 0) out.num_omega = 2 * detector.bins + 1;
  if (out.num_omega < 2) throw PreconditionError("filter needs num_omega >= 2");
  return out;
}

RampFilterPlan::RampFilterPlan(const DetectorLattice& detector, const FilterConfig& requested,
                               Parallelism par)
    : bins_(detector.bins), num_omega_(0), band_(0.0) {
  if (detector.bins < 2) throw PreconditionError("filtering needs at least two detector bins");
  const FilterConfig cfg = resolve_filter(requested, detector);
  num_omega_ = cfg.num_omega;
  band_ = cfg.band;

  const double t_last = detector.t0 + detector.dt * static_cast<double>(detector.bins - 1);
  const UniformGrid t_grid(detector.t0, t_last, detector.bins - 1);
  const UniformGrid w_grid(-band_, band_, num_omega_ - 1);

  forward_.resize(num_omega_ * bins_);
  inverse_.resize(bins_ * num_omega_);

  parallel_for(num_omega_, par, [&](std::size_t k) {
    std::span<Complex> row(forward_.data() + k * bins_, bins_);
    fill_optimal_coefficients(t_grid, -w_grid.node(k), row);
  });
  parallel_for(bins_, par, [&](std::size_t j) {
    std::span<Complex> row(inverse_.data() + j * num_omega_, num_omega_);
    const double t = detector.t0 + detector.dt * static_cast<double>(j);
    fill_optimal_coefficients(w_grid, t, row);
    for (std::size_t g = 0; g < num_omega_; ++g) row[g] *= std::abs(w_grid.node(g));
  });
}

double RampFilterPlan::apply(const double* projection, double* filtered,
                             std::vector<Complex>& spectrum) const {
  spectrum.assign(num_omega_, Complex(0.0));
  for (std::size_t k = 0; k < num_omega_; ++k) {
    const Complex* row = forward_.data() + k * bins_;
    double re = 0.0, im = 0.0;
    for (std::size_t b = 0; b < bins_; ++b) {
      re += row[b].real() * projection[b];
      im += row[b].imag() * projection[b];
    }
    spectrum[k] = Complex(re, im);
  }
  double residue = 0.0;
  for (std::size_t j = 0; j < bins_; ++j) {
    const Complex* row = inverse_.data() + j * num_omega_;
    double re = 0.0, im = 0.0;
    for (std::size_t g = 0; g < num_omega_; ++g) {
      const Complex c = row[g], s = spectrum[g];
      re += c.real() * s.real() - c.imag() * s.imag();
      im += c.real() * s.imag() + c.imag() * s.real();
    }
    filtered[j] = re;
    residue = std::max(residue, std::abs(im));
  }
  return residue;
}

FilteredSinogram filter_projections(const Sinogram& sino, const FilterConfig& config,
                                    Parallelism par) {
  sino.validate();
  const RampFilterPlan plan(sino.detector(), config, par);
  FilteredSinogram out{sino, 0.0};
  std::vector<double> residues(sino.num_angles, 0.0);
  parallel_for(sino.num_angles, par, [&](std::size_t k) {
    std::vector<Complex> scratch;
    residues[k] = plan.apply(sino.data.data() + k * sino.num_bins,
                             out.filtered.data.data() + k * sino.num_bins, scratch);
  });
  out.max_imag_residue = *std::max_element(residues.begin(), residues.end());
  return out;
}

ImageGrid backproject(const FilteredSinogram& q, std::size_t size, Extent extent,
                      Parallelism par) {
  if (size < 16) throw PreconditionError("reconstruction size must be >= 16");
  const Sinogram& s = q.filtered;
  s.validate();
  ImageGrid img(size, size, extent);
  std::vector<double> cosines(s.num_angles), sines(s.num_angles);
  for (std::size_t k = 0; k < s.num_angles; ++k) {
    cosines[k] = std::cos(s.theta(k));
    sines[k] = std::sin(s.theta(k));
  }
  const double last = static_cast<double>(s.num_bins - 1);
  parallel_for(size, par, [&](std::size_t i) {
    const double y = img.y_center(i);
    for (std::size_t j = 0; j < size; ++j) {
      const double x = img.x_center(j);
      double acc = 0.0;
      for (std::size_t k = 0; k < s.num_angles; ++k) {
        const double u = (x * cosines[k] + y * sines[k] - s.t0) / s.dt;
        if (u < 0.0 || u > last) continue;
        const double* row = s.data.data() + k * s.num_bins;
        const auto lo = std::min(static_cast<std::size_t>(u), s.num_bins - 1);
        const double frac = u - static_cast<double>(lo);
        const double v = (lo + 1 < s.num_bins) ? row[lo] + frac * (row[lo + 1] - row[lo]) : row[lo];
        acc += v;
      }
      img.at(i, j) = acc * s.dtheta;
    }
  });
  return img;
}

DetectorLattice resolve_detector(const FbpConfig& config) {
  if (config.num_bins == 0) return default_detector(config.size);
  if (config.num_bins < 2) throw PreconditionError("detector needs at least two bins");
  const double dt = 2.0 / static_cast<double>(config.size);
  return {config.num_bins, -0.5 * static_cast<double>(config.num_bins - 1) * dt, dt};
}

ImageGrid fbp_reconstruct(const EllipsePhantom& phantom, const FbpConfig& config) {
  if (config.size < 16) throw PreconditionError("reconstruction size must be >= 16");
  const Sinogram sino = radon_analytic(phantom, half_rotation(config.angle_step_deg),
                                       resolve_detector(config), config.detector_model,
                                       config.parallelism);
  return fbp_reconstruct(sino, config);
}

ImageGrid fbp_reconstruct(const Sinogram& sino, const FbpConfig& config) {
  const FilteredSinogram q = filter_projections(sino, config.filter, config.parallelism);
  return backproject(q, config.size, Extent{}, config.parallelism);
}

}  // namespace oqf::ct
