#pragma once

#include <cstddef>
#include <vector>

#include "oqf/ct/phantom.hpp"
#include "oqf/parallel.hpp"

namespace oqf::ct {

/// theta_k = theta0 + k * dtheta, k = 0..count-1 (radians).
struct AngleLattice {
  std::size_t count;
  double theta0;
  double dtheta;
};

/// t_j = t0 + j * dt, j = 0..bins-1.
struct DetectorLattice {
  std::size_t bins;
  double t0;
  double dt;
};

/// How a detector bin turns the continuous projection into one number.
enum class DetectorModel {
  point,           // P(t_j, theta): the line integral through the bin centre
  bin_integrated,  // (1/dt) * integral of P over [t_j - dt/2, t_j + dt/2]
};

/// Angle lattice over the half rotation [0, pi): count = round(180 / step_deg).
AngleLattice half_rotation(double step_deg);

/// Detector matching a size x size raster on [-1, 1]^2: pixel-sized bins
/// (dt = 2 / size) centred on t = 0 and spanning the image diagonal.
/// Gives 729 bins for size 512 and 185 for size 128.
DetectorLattice default_detector(std::size_t size);

/// Projection data P(t, theta), angle-major.
struct Sinogram {
  std::size_t num_angles = 0;
  std::size_t num_bins = 0;
  double theta0 = 0.0;
  double dtheta = 0.0;
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> data;

  Sinogram() = default;
  Sinogram(AngleLattice angles, DetectorLattice detector);

  double theta(std::size_t k) const noexcept { return theta0 + dtheta * static_cast<double>(k); }
  double t(std::size_t j) const noexcept { return t0 + dt * static_cast<double>(j); }
  double& at(std::size_t k, std::size_t j) { return data[k * num_bins + j]; }
  double at(std::size_t k, std::size_t j) const { return data[k * num_bins + j]; }

  AngleLattice angles() const noexcept { return {num_angles, theta0, dtheta}; }
  DetectorLattice detector() const noexcept { return {num_bins, t0, dt}; }

  /// Throws DimensionError / PreconditionError when the header and payload disagree.
  void validate() const;
};

/// Exact line integral of one ellipse along x cos(theta) + y sin(theta) = t.
double ellipse_projection(const Ellipse& e, double t, double theta) noexcept;

/// Exact mean of ellipse_projection over [t - dt/2, t + dt/2].
double ellipse_projection_bin(const Ellipse& e, double t, double dt, double theta) noexcept;

/// Analytic sinogram of an ellipse phantom (no rasterisation).
Sinogram radon_analytic(const EllipsePhantom& phantom, AngleLattice angles,
                        DetectorLattice detector, DetectorModel model = DetectorModel::point,
                        Parallelism par = {});

/// sum_j P(t_j, theta_k) * dt for each angle.
std::vector<double> projection_mass(const Sinogram& sino);

}  // namespace oqf::ct
