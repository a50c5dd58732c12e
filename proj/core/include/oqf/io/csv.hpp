#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "oqf/ct/phantom.hpp"
#include "oqf/fourier.hpp"
#include "oqf/grid.hpp"
#include "oqf/quadrature.hpp"

namespace oqf::io {

/// Shortest decimal text that reads back to the same double ("inf", "-inf", "nan" otherwise).
std::string format_double(double v);
/// Fixed 17 significant digits ("%.17g").
std::string format_double17(double v);

/// "beta,re,im" rows, 17 significant digits.
std::string coefficients_csv(const OptimalCoefficients& c);

/// Two-column-plus-one table: `<axis>,re,im`, shortest round-trip text.
std::string complex_table_csv(const std::string& axis, const std::vector<double>& positions,
                              const std::vector<Complex>& values);

/// "omega,abs_re_err,abs_im_err".
std::string error_sweep_csv(const std::vector<QuadratureErrorRecord>& records);

struct ComplexTable {
  std::string axis;
  std::vector<double> positions;
  std::vector<Complex> values;
};

/// Parses `<axis>,re,im` text. The header is required and `expected_axis`,
/// when non-empty, must match. Throws ValidationError on an empty table or a
/// malformed row (the message carries the 1-based line number).
ComplexTable parse_complex_table(const std::string& text, const std::string& expected_axis = {});
ComplexTable read_complex_table(const std::filesystem::path& path,
                                const std::string& expected_axis = {});

/// Checks that `positions` are strictly increasing and uniformly spaced to
/// `rel_tol` of the step; returns the fitted grid. ValidationError names the
/// first offending row (1-based data row).
UniformGrid require_uniform(const std::vector<double>& positions, double rel_tol = 1e-9);

/// Ellipse table "cx,cy,a,b,rotation_deg,intensity" with header; '#' comments allowed.
ct::EllipsePhantom parse_phantom_table(const std::string& text);
ct::EllipsePhantom read_phantom_table(const std::filesystem::path& path);
std::string phantom_table_csv(const ct::EllipsePhantom& phantom);

}  // namespace oqf::io
