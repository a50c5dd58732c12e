#pragma once

// Binary exchange formats (all little-endian):
//
//   sinogram:  "OQFSINO1" | u32 num_angles | u32 num_bins | f64 theta0 | f64 dtheta
//              | f64 t0 | f64 dt | num_angles*num_bins f64, angle-major
//   image:     "OQFIMG1\0" | u32 rows | u32 cols | f64 min_x | f64 min_y | f64 max_x
//              | f64 max_y | rows*cols f64, row-major
//
// Images are also exported as 16-bit binary PGM (P5, maxval 65535, linear
// min-max scaling) with the scaling written to a "min=...\nmax=...\n" sidecar.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "oqf/ct/phantom.hpp"
#include "oqf/ct/radon.hpp"

namespace oqf::io {

std::vector<std::uint8_t> encode_sinogram(const ct::Sinogram& sino);
ct::Sinogram decode_sinogram(const std::vector<std::uint8_t>& bytes);

std::vector<std::uint8_t> encode_image(const ct::ImageGrid& img);
ct::ImageGrid decode_image(const std::vector<std::uint8_t>& bytes);

struct PgmScaling {
  double min;
  double max;
};

std::vector<std::uint8_t> encode_pgm16(const ct::ImageGrid& img, PgmScaling* scaling = nullptr);
std::string pgm_sidecar_text(const PgmScaling& scaling);
/// Path of the scaling sidecar written next to a PGM: "<pgm>.scale.txt".
std::filesystem::path pgm_sidecar_path(const std::filesystem::path& pgm);

/// Reads a whole file; throws IoError.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`; throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
void write_file_atomic(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

void write_sinogram(const std::filesystem::path& path, const ct::Sinogram& sino);
ct::Sinogram read_sinogram(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const ct::ImageGrid& img);
ct::ImageGrid read_image(const std::filesystem::path& path);
/// Writes the PGM and its sidecar.
void write_pgm16(const std::filesystem::path& path, const ct::ImageGrid& img);

}  // namespace oqf::io
