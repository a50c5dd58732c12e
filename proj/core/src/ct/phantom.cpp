#include "oqf/ct/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oqf/errors.hpp"

namespace oqf::ct {

ImageGrid::ImageGrid(std::size_t rows, std::size_t cols, Extent extent)
    : ImageGrid(rows, cols, extent, std::vector<double>(rows * cols, 0.0)) {}

ImageGrid::ImageGrid(std::size_t rows, std::size_t cols, Extent extent, std::vector<double> pixels)
    : rows_(rows), cols_(cols), extent_(extent), pixels_(std::move(pixels)) {
  if (rows == 0 || cols == 0) throw PreconditionError("image must have at least one pixel");
  if (pixels_.size() != rows * cols) {
    throw DimensionError("image pixel buffer does not match rows * cols");
  }
  if (!(extent.max_x > extent.min_x) || !(extent.max_y > extent.min_y)) {
    throw PreconditionError("image extent must have positive width and height");
  }
}

double ImageGrid::x_center(std::size_t j) const noexcept {
  const double w = (extent_.max_x - extent_.min_x) / static_cast<double>(cols_);
  return extent_.min_x + (static_cast<double>(j) + 0.5) * w;
}

double ImageGrid::y_center(std::size_t i) const noexcept {
  const double w = (extent_.max_y - extent_.min_y) / static_cast<double>(rows_);
  return extent_.max_y - (static_cast<double>(i) + 0.5) * w;
}

bool Ellipse::contains(double x, double y) const noexcept {
  const double phi = rotation_deg * std::numbers::pi / 180.0;
  const double c = std::cos(phi), s = std::sin(phi);
  const double dx = x - center_x, dy = y - center_y;
  const double u = (dx * c + dy * s) / semi_axis_a;
  const double v = (-dx * s + dy * c) / semi_axis_b;
  return u * u + v * v <= 1.0;
}

double Ellipse::area() const noexcept { return std::numbers::pi * semi_axis_a * semi_axis_b; }

double EllipsePhantom::value_at(double x, double y) const noexcept {
  double v = 0.0;
  for (const auto& e : ellipses) {
    if (e.contains(x, y)) v += e.intensity;
  }
  return v;
}

double EllipsePhantom::total_integral() const noexcept {
  double m = 0.0;
  for (const auto& e : ellipses) m += e.intensity * e.area();
  return m;
}

bool EllipsePhantom::inside_unit_disk() const noexcept {
  // Farthest point from the origin is at most |centre| + major semi-axis.
  return std::all_of(ellipses.begin(), ellipses.end(), [](const Ellipse& e) {
    return std::hypot(e.center_x, e.center_y) + std::max(e.semi_axis_a, e.semi_axis_b) <=
           1.0 + 1e-12;
  });
}

EllipsePhantom shepp_logan_phantom(PhantomVariant variant) {
  // centre_x, centre_y, a, b, rotation (deg); intensities below.
  static constexpr double kGeometry[10][5] = {
      {0.0, 0.0, 0.69, 0.92, 0.0},        {0.0, -0.0184, 0.6624, 0.874, 0.0},
      {0.22, 0.0, 0.11, 0.31, -18.0},     {-0.22, 0.0, 0.16, 0.41, 18.0},
      {0.0, 0.35, 0.21, 0.25, 0.0},       {0.0, 0.1, 0.046, 0.046, 0.0},
      {0.0, -0.1, 0.046, 0.046, 0.0},     {-0.08, -0.605, 0.046, 0.023, 0.0},
      {0.0, -0.606, 0.023, 0.023, 0.0},   {0.06, -0.605, 0.023, 0.046, 0.0},
  };
  static constexpr double kModified[10] = {1.0, -0.8, -0.2, -0.2, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};
  static constexpr double kClassic[10] = {2.0,  -0.98, -0.02, -0.02, 0.01,
                                          0.01, 0.01,  0.01,  0.01,  0.01};
  const double* intensity = variant == PhantomVariant::modified ? kModified : kClassic;
  EllipsePhantom p;
  for (int k = 0; k < 10; ++k) {
    const auto& g = kGeometry[k];
    p.ellipses.push_back({g[0], g[1], g[2], g[3], g[4], intensity[k]});
  }
  return p;
}

PhantomVariant parse_phantom_variant(const std::string& name) {
  if (name == "modified") return PhantomVariant::modified;
  if (name == "classic") return PhantomVariant::classic;
  throw PreconditionError("unknown phantom variant '" + name + "' (expected modified|classic)");
}

std::string to_string(PhantomVariant variant) {
  return variant == PhantomVariant::modified ? "modified" : "classic";
}

ImageGrid rasterize(const EllipsePhantom& phantom, std::size_t size, Extent extent) {
  if (size == 0) throw PreconditionError("raster size must be positive");
  ImageGrid img(size, size, extent);
  for (std::size_t i = 0; i < size; ++i) {
    const double y = img.y_center(i);
    for (std::size_t j = 0; j < size; ++j) img.at(i, j) = phantom.value_at(img.x_center(j), y);
  }
  return img;
}

ImageGrid shepp_logan(std::size_t size, PhantomVariant variant) {
  if (size < 16) throw PreconditionError("phantom size must be >= 16");
  return rasterize(shepp_logan_phantom(variant), size);
}

}  // namespace oqf::ct
