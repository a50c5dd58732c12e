#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace oqf::ct {

/// Physical bounding box of a raster.
struct Extent {
  double min_x = -1.0;
  double min_y = -1.0;
  double max_x = 1.0;
  double max_y = 1.0;

  friend bool operator==(const Extent&, const Extent&) = default;
};

/// Row-major raster; row 0 is the top edge (max_y), column 0 the left edge (min_x).
class ImageGrid {
 public:
  ImageGrid(std::size_t rows, std::size_t cols, Extent extent = {});
  ImageGrid(std::size_t rows, std::size_t cols, Extent extent, std::vector<double> pixels);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Extent& extent() const noexcept { return extent_; }

  double& at(std::size_t i, std::size_t j) { return pixels_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return pixels_[i * cols_ + j]; }

  /// Physical coordinates of the pixel centre.
  double x_center(std::size_t j) const noexcept;
  double y_center(std::size_t i) const noexcept;

  const std::vector<double>& pixels() const noexcept { return pixels_; }
  std::vector<double>& pixels() noexcept { return pixels_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  Extent extent_;
  std::vector<double> pixels_;
};

/// Ellipse with additive intensity; `a` is the semi-axis along the rotated x axis
/// and the rotation is counter-clockwise in degrees.
struct Ellipse {
  double center_x;
  double center_y;
  double semi_axis_a;
  double semi_axis_b;
  double rotation_deg;
  double intensity;

  bool contains(double x, double y) const noexcept;
  double area() const noexcept;
};

enum class PhantomVariant { modified, classic };

struct EllipsePhantom {
  std::vector<Ellipse> ellipses;

  /// Sum of intensities of ellipses containing (x, y).
  double value_at(double x, double y) const noexcept;
  /// integral over the plane: sum of intensity * area.
  double total_integral() const noexcept;
  /// True when every ellipse lies inside the closed unit disk.
  bool inside_unit_disk() const noexcept;
};

/// Ten-ellipse Shepp-Logan head. `modified` uses the high-contrast intensities
/// (skull 1.0, brain 0.2); `classic` uses the original ones (2.0, -0.98, ...).
EllipsePhantom shepp_logan_phantom(PhantomVariant variant = PhantomVariant::modified);

PhantomVariant parse_phantom_variant(const std::string& name);
std::string to_string(PhantomVariant variant);

/// Centre-sampled raster of `phantom` on a size x size grid over `extent`.
ImageGrid rasterize(const EllipsePhantom& phantom, std::size_t size, Extent extent = {});

/// rasterize(shepp_logan_phantom(variant), size). Requires size >= 16.
ImageGrid shepp_logan(std::size_t size, PhantomVariant variant = PhantomVariant::modified);

}  // namespace oqf::ct
