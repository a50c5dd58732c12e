#include "oqf/ct/radon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oqf/errors.hpp"

namespace oqf::ct {
namespace {

struct Chord {
  double offset;  // signed distance of the projected centre
  double reach;   // half-width of the shadow, a(theta) in the usual notation
  double scale;   // 2 A B / reach^2
};

Chord chord_geometry(const Ellipse& e, double theta) noexcept {
  const double rel = theta - e.rotation_deg * std::numbers::pi / 180.0;
  const double c = std::cos(rel), s = std::sin(rel);
  const double a2 = e.semi_axis_a * e.semi_axis_a * c * c + e.semi_axis_b * e.semi_axis_b * s * s;
  const double offset = e.center_x * std::cos(theta) + e.center_y * std::sin(theta);
  return {offset, std::sqrt(a2), 2.0 * e.semi_axis_a * e.semi_axis_b / a2};
}

// Antiderivative of sqrt(r^2 - s^2), clamped to the shadow.
double half_disk_area(double s, double r) noexcept {
  const double u = std::clamp(s, -r, r);
  return 0.5 * (u * std::sqrt(std::max(0.0, r * r - u * u)) + r * r * std::asin(u / r));
}

}  // namespace

AngleLattice half_rotation(double step_deg) {
  if (!(step_deg > 0.0) || step_deg > 180.0) {
    throw PreconditionError("angle step must be in (0, 180] degrees");
  }
  const auto count = static_cast<std::size_t>(std::llround(180.0 / step_deg));
  return {std::max<std::size_t>(count, 1), 0.0, step_deg * std::numbers::pi / 180.0};
}

DetectorLattice default_detector(std::size_t size) {
  if (size == 0) throw PreconditionError("detector size must be positive");
  const auto half = static_cast<std::size_t>(std::ceil(std::numbers::sqrt2 * 0.5 * size));
  const std::size_t bins = 2 * half + 3;
  const double dt = 2.0 / static_cast<double>(size);
  return {bins, -0.5 * static_cast<double>(bins - 1) * dt, dt};
}

Sinogram::Sinogram(AngleLattice angles, DetectorLattice detector)
    : num_angles(angles.count),
      num_bins(detector.bins),
      theta0(angles.theta0),
      dtheta(angles.dtheta),
      t0(detector.t0),
      dt(detector.dt),
      data(angles.count * detector.bins, 0.0) {
  validate();
}

void Sinogram::validate() const {
  if (num_angles == 0 || num_bins == 0) {
    throw PreconditionError("sinogram needs at least one angle and one bin");
  }
  if (!(dtheta > 0.0) || !(dt > 0.0) || !std::isfinite(theta0) || !std::isfinite(t0)) {
    throw PreconditionError("sinogram lattice steps must be positive and finite");
  }
  if (data.size() != num_angles * num_bins) {
    throw DimensionError("sinogram payload has " + std::to_string(data.size()) +
                         " values, header implies " + std::to_string(num_angles * num_bins));
  }
}

double ellipse_projection(const Ellipse& e, double t, double theta) noexcept {
  const Chord ch = chord_geometry(e, theta);
  const double s = t - ch.offset;
  const double d = ch.reach * ch.reach - s * s;
  if (d <= 0.0) return 0.0;
  return e.intensity * ch.scale * std::sqrt(d);
}

double ellipse_projection_bin(const Ellipse& e, double t, double dt, double theta) noexcept {
  const Chord ch = chord_geometry(e, theta);
  const double s = t - ch.offset;
  const double lo = s - 0.5 * dt, hi = s + 0.5 * dt;
  if (hi <= -ch.reach || lo >= ch.reach) return 0.0;
  const double area = half_disk_area(hi, ch.reach) - half_disk_area(lo, ch.reach);
  return e.intensity * ch.scale * area / dt;
}

Sinogram radon_analytic(const EllipsePhantom& phantom, AngleLattice angles,
                        DetectorLattice detector, DetectorModel model, Parallelism par) {
  Sinogram sino(angles, detector);
  parallel_for(sino.num_angles, par, [&](std::size_t k) {
    const double theta = sino.theta(k);
    for (std::size_t j = 0; j < sino.num_bins; ++j) {
      const double t = sino.t(j);
      double v = 0.0;
      for (const auto& e : phantom.ellipses) {
        v += model == DetectorModel::point ? ellipse_projection(e, t, theta)
                                           : ellipse_projection_bin(e, t, sino.dt, theta);
      }
      sino.at(k, j) = v;
    }
  });
  return sino;
}

std::vector<double> projection_mass(const Sinogram& sino) {
  std::vector<double> mass(sino.num_angles, 0.0);
  for (std::size_t k = 0; k < sino.num_angles; ++k) {
    double m = 0.0;
    for (std::size_t j = 0; j < sino.num_bins; ++j) m += sino.at(k, j);
    mass[k] = m * sino.dt;
  }
  return mass;
}

}  // namespace oqf::ct
