#include "oqf/ct/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "oqf/errors.hpp"

namespace oqf::ct {

Region parse_region(const std::string& name) {
  if (name == "whole") return Region::whole;
  if (name == "inner") return Region::inner;
  throw PreconditionError("unknown region '" + name + "' (expected whole|inner)");
}

std::string to_string(Region region) { return region == Region::whole ? "whole" : "inner"; }

InnerMask InnerMask::shepp_logan_default() {
  return {shepp_logan_phantom().ellipses.at(1), 0.98};
}

std::string InnerMask::describe() const {
  std::ostringstream os;
  os << "ellipse(cx=" << boundary.center_x << ",cy=" << boundary.center_y
     << ",a=" << boundary.semi_axis_a << ",b=" << boundary.semi_axis_b
     << ",rot=" << boundary.rotation_deg << ")*" << scale;
  return os.str();
}

std::vector<bool> InnerMask::rasterize(const ImageGrid& like) const {
  Ellipse shrunk = boundary;
  shrunk.semi_axis_a *= scale;
  shrunk.semi_axis_b *= scale;
  std::vector<bool> mask(like.rows() * like.cols());
  for (std::size_t i = 0; i < like.rows(); ++i) {
    const double y = like.y_center(i);
    for (std::size_t j = 0; j < like.cols(); ++j) {
      mask[i * like.cols() + j] = shrunk.contains(like.x_center(j), y);
    }
  }
  return mask;
}

QualityReport image_metrics(const ImageGrid& test, const ImageGrid& ref, Region region,
                            const InnerMask& mask) {
  if (test.rows() != ref.rows() || test.cols() != ref.cols()) {
    throw DimensionError("metric images differ in size");
  }
  std::vector<bool> keep;
  if (region == Region::inner) keep = mask.rasterize(ref);

  const auto& t = test.pixels();
  const auto& r = ref.pixels();
  const double peak = *std::max_element(r.begin(), r.end());

  QualityReport out;
  out.region = region;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!keep.empty() && !keep[k]) continue;
    const double d = t[k] - r[k];
    out.e_max = std::max(out.e_max, std::abs(d));
    sum_sq += d * d;
    ++out.pixel_count;
  }
  if (out.pixel_count == 0) throw PreconditionError("metric region contains no pixels");
  out.mse = sum_sq / static_cast<double>(out.pixel_count);
  out.psnr = out.mse > 0.0 ? 10.0 * std::log10(peak * peak / out.mse)
                           : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace oqf::ct
