#include "oqf/io/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "oqf/errors.hpp"
#include "oqf/io/formats.hpp"

namespace oqf::io {
namespace {

std::string trim(std::string_view s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && (s[lo] == ' ' || s[lo] == '\t' || s[lo] == '\r')) ++lo;
  while (hi > lo && (s[hi - 1] == ' ' || s[hi - 1] == '\t' || s[hi - 1] == '\r')) --hi;
  return std::string(s.substr(lo, hi - lo));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(const std::string& field, std::size_t line_no) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = first + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ValidationError("line " + std::to_string(line_no) + ": '" + field + "' is not a number");
  }
  return v;
}

/// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(no, std::move(t));
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_double17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string coefficients_csv(const OptimalCoefficients& c) {
  std::string out = "beta,re,im\n";
  for (std::size_t beta = 0; beta < c.values.size(); ++beta) {
    out += std::to_string(beta);
    out += ',';
    out += format_double17(c.values[beta].real());
    out += ',';
    out += format_double17(c.values[beta].imag());
    out += '\n';
  }
  return out;
}

std::string complex_table_csv(const std::string& axis, const std::vector<double>& positions,
                              const std::vector<Complex>& values) {
  if (positions.size() != values.size()) throw DimensionError("table columns differ in length");
  std::string out = axis + ",re,im\n";
  for (std::size_t k = 0; k < positions.size(); ++k) {
    out += format_double(positions[k]);
    out += ',';
    out += format_double(values[k].real());
    out += ',';
    out += format_double(values[k].imag());
    out += '\n';
  }
  return out;
}

std::string error_sweep_csv(const std::vector<QuadratureErrorRecord>& records) {
  std::string out = "omega,abs_re_err,abs_im_err\n";
  for (const auto& r : records) {
    out += format_double(r.omega);
    out += ',';
    out += format_double(std::abs(r.error.real()));
    out += ',';
    out += format_double(std::abs(r.error.imag()));
    out += '\n';
  }
  return out;
}

ComplexTable parse_complex_table(const std::string& text, const std::string& expected_axis) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("empty table: no header and no rows");
  const auto header = split_fields(lines.front().second);
  if (header.size() != 3 || header[1] != "re" || header[2] != "im") {
    throw ValidationError("line " + std::to_string(lines.front().first) +
                          ": expected header '<axis>,re,im'");
  }
  if (!expected_axis.empty() && header[0] != expected_axis) {
    throw ValidationError("line " + std::to_string(lines.front().first) + ": expected axis '" +
                          expected_axis + "', found '" + header[0] + "'");
  }
  ComplexTable out;
  out.axis = header[0];
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, line] = lines[k];
    const auto fields = split_fields(line);
    if (fields.size() != 3) {
      throw ValidationError("line " + std::to_string(no) + ": expected 3 fields, found " +
                            std::to_string(fields.size()));
    }
    out.positions.push_back(parse_number(fields[0], no));
    out.values.emplace_back(parse_number(fields[1], no), parse_number(fields[2], no));
  }
  if (out.positions.empty()) throw ValidationError("empty table: header without rows");
  return out;
}

ComplexTable read_complex_table(const std::filesystem::path& path,
                                const std::string& expected_axis) {
  return parse_complex_table(read_text(path), expected_axis);
}

UniformGrid require_uniform(const std::vector<double>& positions, double rel_tol) {
  if (positions.size() < 2) throw ValidationError("need at least two samples for a grid");
  for (std::size_t k = 1; k < positions.size(); ++k) {
    if (!(positions[k] > positions[k - 1]) || !std::isfinite(positions[k])) {
      throw ValidationError("row " + std::to_string(k + 1) + ": positions not strictly increasing");
    }
  }
  if (!std::isfinite(positions.front())) throw ValidationError("row 1: position is not finite");
  const UniformGrid grid(positions.front(), positions.back(), positions.size() - 1);
  const double h = grid.h();
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (std::abs(positions[k] - grid.node(k)) > rel_tol * h) {
      throw ValidationError("row " + std::to_string(k + 1) + ": position " +
                            format_double(positions[k]) + " is off the uniform grid (expected " +
                            format_double(grid.node(k)) + ")");
    }
  }
  return grid;
}

ct::EllipsePhantom parse_phantom_table(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ValidationError("empty phantom table");
  const auto header = split_fields(lines.front().second);
  const std::vector<std::string> expected{"cx", "cy", "a", "b", "rotation_deg", "intensity"};
  if (header != expected) {
    throw ValidationError("line " + std::to_string(lines.front().first) +
                          ": expected header 'cx,cy,a,b,rotation_deg,intensity'");
  }
  ct::EllipsePhantom out;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [no, line] = lines[k];
    const auto f = split_fields(line);
    if (f.size() != 6) {
      throw ValidationError("line " + std::to_string(no) + ": expected 6 fields, found " +
                            std::to_string(f.size()));
    }
    ct::Ellipse e{parse_number(f[0], no), parse_number(f[1], no), parse_number(f[2], no),
                  parse_number(f[3], no), parse_number(f[4], no), parse_number(f[5], no)};
    if (!(e.semi_axis_a > 0.0) || !(e.semi_axis_b > 0.0)) {
      throw ValidationError("line " + std::to_string(no) + ": semi-axes must be positive");
    }
    out.ellipses.push_back(e);
  }
  if (out.ellipses.empty()) throw ValidationError("phantom table has no ellipses");
  return out;
}

ct::EllipsePhantom read_phantom_table(const std::filesystem::path& path) {
  return parse_phantom_table(read_text(path));
}

std::string phantom_table_csv(const ct::EllipsePhantom& phantom) {
  std::string out = "cx,cy,a,b,rotation_deg,intensity\n";
  for (const auto& e : phantom.ellipses) {
    for (double v : {e.center_x, e.center_y, e.semi_axis_a, e.semi_axis_b, e.rotation_deg}) {
      out += format_double(v);
      out += ',';
    }
    out += format_double(e.intensity);
    out += '\n';
  }
  return out;
}

}  // namespace oqf::io
