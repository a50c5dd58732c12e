#include "oqf/io/formats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <system_error>

#include "oqf/errors.hpp"
#include "oqf/io/csv.hpp"

namespace oqf::io {
namespace {

constexpr std::array<char, 8> kSinoMagic{'O', 'Q', 'F', 'S', 'I', 'N', 'O', '1'};
constexpr std::array<char, 8> kImageMagic{'O', 'Q', 'F', 'I', 'M', 'G', '1', '\0'};

class Writer {
 public:
  void magic(const std::array<char, 8>& m) {
    for (char c : m) out_.push_back(static_cast<std::uint8_t>(c));
  }
  void u32(std::uint32_t v) {
    for (int k = 0; k < 4; ++k) out_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
  }
  void f64(double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int k = 0; k < 8; ++k) out_.push_back(static_cast<std::uint8_t>(bits >> (8 * k)));
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  void magic(const std::array<char, 8>& m, const char* what) {
    need(8, "truncated magic");
    for (std::size_t k = 0; k < 8; ++k) {
      if (bytes_[pos_ + k] != static_cast<std::uint8_t>(m[k])) {
        throw FormatError(std::string("bad magic, not a ") + what + " file", pos_ + k);
      }
    }
    pos_ += 8;
  }
  std::uint32_t u32(const char* field) {
    need(4, field);
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(bytes_[pos_ + k]) << (8 * k);
    pos_ += 4;
    return v;
  }
  double f64(const char* field) {
    need(8, field);
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(bytes_[pos_ + k]) << (8 * k);
    pos_ += 8;
    return std::bit_cast<double>(v);
  }
  std::vector<double> payload(std::uint64_t count) {
    const std::uint64_t remaining = bytes_.size() - pos_;
    if (remaining != count * 8) {
      throw FormatError("payload holds " + std::to_string(remaining) + " bytes, header implies " +
                            std::to_string(count * 8),
                        pos_);
    }
    std::vector<double> out(count);
    for (auto& v : out) v = f64("payload");
    return out;
  }
  std::size_t pos() const noexcept { return pos_; }

 private:
  void need(std::size_t n, const char* what) {
    if (bytes_.size() - pos_ < n) throw FormatError(std::string("truncated header: ") + what, pos_);
  }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

std::uint32_t checked_u32(std::size_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw PreconditionError(std::string(what) + " exceeds the u32 header field");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<std::uint8_t> encode_sinogram(const ct::Sinogram& sino) {
  sino.validate();
  Writer w;
  w.magic(kSinoMagic);
  w.u32(checked_u32(sino.num_angles, "num_angles"));
  w.u32(checked_u32(sino.num_bins, "num_bins"));
  w.f64(sino.theta0);
  w.f64(sino.dtheta);
  w.f64(sino.t0);
  w.f64(sino.dt);
  for (double v : sino.data) w.f64(v);
  return w.take();
}

ct::Sinogram decode_sinogram(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  r.magic(kSinoMagic, "OQFSINO1 sinogram");
  ct::Sinogram s;
  s.num_angles = r.u32("num_angles");
  s.num_bins = r.u32("num_bins");
  const std::size_t lattice_at = r.pos();
  s.theta0 = r.f64("theta0");
  s.dtheta = r.f64("dtheta");
  s.t0 = r.f64("t0");
  s.dt = r.f64("dt");
  if (s.num_angles == 0 || s.num_bins == 0) throw FormatError("empty sinogram lattice", 8);
  if (!(s.dtheta > 0.0) || !(s.dt > 0.0)) {
    throw FormatError("non-positive lattice step", lattice_at);
  }
  s.data = r.payload(static_cast<std::uint64_t>(s.num_angles) * s.num_bins);
  return s;
}

std::vector<std::uint8_t> encode_image(const ct::ImageGrid& img) {
  Writer w;
  w.magic(kImageMagic);
  w.u32(checked_u32(img.rows(), "rows"));
  w.u32(checked_u32(img.cols(), "cols"));
  const auto& e = img.extent();
  w.f64(e.min_x);
  w.f64(e.min_y);
  w.f64(e.max_x);
  w.f64(e.max_y);
  for (double v : img.pixels()) w.f64(v);
  return w.take();
}

ct::ImageGrid decode_image(const std::vector<std::uint8_t>& bytes) {
  Reader r(bytes);
  r.magic(kImageMagic, "OQFIMG1 image");
  const std::uint32_t rows = r.u32("rows");
  const std::uint32_t cols = r.u32("cols");
  const std::size_t extent_at = r.pos();
  ct::Extent e;
  e.min_x = r.f64("extent_min_x");
  e.min_y = r.f64("extent_min_y");
  e.max_x = r.f64("extent_max_x");
  e.max_y = r.f64("extent_max_y");
  if (rows == 0 || cols == 0) throw FormatError("empty image", 8);
  if (!(e.max_x > e.min_x) || !(e.max_y > e.min_y)) {
    throw FormatError("degenerate image extent", extent_at);
  }
  auto pixels = r.payload(static_cast<std::uint64_t>(rows) * cols);
  return ct::ImageGrid(rows, cols, e, std::move(pixels));
}

std::vector<std::uint8_t> encode_pgm16(const ct::ImageGrid& img, PgmScaling* scaling) {
  const auto& px = img.pixels();
  const auto [lo_it, hi_it] = std::minmax_element(px.begin(), px.end());
  const double lo = *lo_it, hi = *hi_it;
  if (scaling != nullptr) *scaling = {lo, hi};
  const std::string header =
      "P5\n" + std::to_string(img.cols()) + " " + std::to_string(img.rows()) + "\n65535\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + 2 * px.size());
  const double span = hi - lo;
  for (double v : px) {
    const double unit = span > 0.0 ? (v - lo) / span : 0.0;
    const auto q = static_cast<std::uint16_t>(std::lround(std::clamp(unit, 0.0, 1.0) * 65535.0));
    out.push_back(static_cast<std::uint8_t>(q >> 8));  // PGM samples are big-endian
    out.push_back(static_cast<std::uint8_t>(q & 0xff));
  }
  return out;
}

std::string pgm_sidecar_text(const PgmScaling& scaling) {
  return "min=" + format_double(scaling.min) + "\nmax=" + format_double(scaling.max) + "\n";
}

std::filesystem::path pgm_sidecar_path(const std::filesystem::path& pgm) {
  return std::filesystem::path(pgm.string() + ".scale.txt");
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
  return bytes;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  namespace fs = std::filesystem;
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ignore;
      fs::remove(tmp, ignore);
      throw IoError("write failure on '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  write_file_atomic(path,
                    std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void write_sinogram(const std::filesystem::path& path, const ct::Sinogram& sino) {
  write_file_atomic(path, encode_sinogram(sino));
}

ct::Sinogram read_sinogram(const std::filesystem::path& path) {
  return decode_sinogram(read_file(path));
}

void write_image(const std::filesystem::path& path, const ct::ImageGrid& img) {
  write_file_atomic(path, encode_image(img));
}

ct::ImageGrid read_image(const std::filesystem::path& path) { return decode_image(read_file(path)); }

void write_pgm16(const std::filesystem::path& path, const ct::ImageGrid& img) {
  PgmScaling scaling{};
  const auto bytes = encode_pgm16(img, &scaling);
  write_file_atomic(path, bytes);
  write_file_atomic(pgm_sidecar_path(path), pgm_sidecar_text(scaling));
}

}  // namespace oqf::io
