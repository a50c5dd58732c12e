#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oqf/ct/phantom.hpp"

namespace oqf::ct {

enum class Region { whole, inner };

Region parse_region(const std::string& name);
std::string to_string(Region region);

/// Pixels counted as "inside the outer ring": centres inside `boundary`
/// with both semi-axes multiplied by `scale`.
struct InnerMask {
  Ellipse boundary;
  double scale;

  /// Second (inner skull) ellipse of the Shepp-Logan head, shrunk by 0.98.
  static InnerMask shepp_logan_default();

  std::string describe() const;
  std::vector<bool> rasterize(const ImageGrid& like) const;
};

struct QualityReport {
  double e_max = 0.0;
  double mse = 0.0;
  double psnr = 0.0;  // +infinity when mse == 0
  Region region = Region::whole;
  std::size_t pixel_count = 0;
};

/// E_max = max |I - I_ref|, MSE = mean (I - I_ref)^2 over the region and
/// PSNR = 10 log10(I_max^2 / MSE), with I_max the largest reference pixel
/// over the whole image.
QualityReport image_metrics(const ImageGrid& test, const ImageGrid& ref, Region region,
                            const InnerMask& mask = InnerMask::shepp_logan_default());

}  // namespace oqf::ct
