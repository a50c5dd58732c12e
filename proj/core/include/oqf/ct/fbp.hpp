#pragma once

#include <cstddef>
#include <vector>

#include "oqf/ct/phantom.hpp"
#include "oqf/ct/radon.hpp"
#include "oqf/grid.hpp"
#include "oqf/parallel.hpp"

namespace oqf::ct {

/// Ramp-filtered projections Q(t, theta) on the lattice of the source sinogram.
struct FilteredSinogram {
  Sinogram filtered;              // source lattice; data holds Re Q
  double max_imag_residue = 0.0;  // max |Im Q| dropped while filtering
};

/// Frequency band [-band, band] sampled at num_omega equispaced points.
/// Zero values request the defaults: band = 1 / (2 dt), num_omega = 2 * bins + 1.
struct FilterConfig {
  double band = 0.0;
  std::size_t num_omega = 0;
};

/// Resolved band/lattice for a detector.
FilterConfig resolve_filter(const FilterConfig& requested, const DetectorLattice& detector);

/// Dense operators of the filter step for one detector/band pair:
///   forward[k][beta]  = C_{beta,-omega_k}[detector interval]
///   inverse[j][gamma] = C_{gamma,t_j}[-band, band] * |omega_gamma|
/// Both are independent of the projection angle and built once per run.
class RampFilterPlan {
 public:
  RampFilterPlan(const DetectorLattice& detector, const FilterConfig& config,
                 Parallelism par = {});

  /// Q = inverse * (forward * projection); returns max |Im Q| over the row.
  double apply(const double* projection, double* filtered, std::vector<Complex>& scratch) const;

  std::size_t bins() const noexcept { return bins_; }
  std::size_t num_omega() const noexcept { return num_omega_; }
  double band() const noexcept { return band_; }

 private:
  std::size_t bins_;
  std::size_t num_omega_;
  double band_;
  std::vector<Complex> forward_;
  std::vector<Complex> inverse_;
};

/// Per angle: optimal-quadrature Fourier transform over the detector interval,
/// multiplication by |omega| on the band, optimal-quadrature inverse transform
/// evaluated back at each detector position.
FilteredSinogram filter_projections(const Sinogram& sino, const FilterConfig& config = {},
                                    Parallelism par = {});

/// mu(x, y) = sum_k Q(x cos theta_k + y sin theta_k, theta_k) * dtheta with Q
/// linearly interpolated in t; positions off the detector contribute zero.
ImageGrid backproject(const FilteredSinogram& q, std::size_t size, Extent extent = {},
                      Parallelism par = {});

struct FbpConfig {
  std::size_t size = 512;
  double angle_step_deg = 0.5;
  std::size_t num_bins = 0;  // 0: default_detector(size)
  FilterConfig filter{};
  DetectorModel detector_model = DetectorModel::point;
  Parallelism parallelism{};
};

/// Detector lattice implied by the config (default or num_bins pixel-sized bins).
DetectorLattice resolve_detector(const FbpConfig& config);

/// radon_analytic -> filter_projections -> backproject.
ImageGrid fbp_reconstruct(const EllipsePhantom& phantom, const FbpConfig& config);

/// filter_projections -> backproject for measured data.
ImageGrid fbp_reconstruct(const Sinogram& sino, const FbpConfig& config);

}  // namespace oqf::ct
