#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "oqf/ct/fbp.hpp"
#include "oqf/ct/metrics.hpp"
#include "oqf/ct/phantom.hpp"
#include "oqf/ct/radon.hpp"
#include "oqf/errors.hpp"
#include "oqf/fourier.hpp"
#include "oqf/io/csv.hpp"
#include "oqf/io/formats.hpp"
#include "oqf/quadrature.hpp"
#include "oqf/verify.hpp"

namespace oqf::cli {
namespace {

struct IntervalOpts {
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 10;
};

struct LatticeOpts {
  std::optional<double> single;
  double min = -1.0;
  double max = 1.0;
  std::size_t count = 0;
};

struct PhantomOpts {
  std::string variant = "modified";
  std::string file;
};

struct Options {
  unsigned threads = 1;
  bool dump_config = false;

  IntervalOpts coeffs;
  double coeffs_omega = 0.0;
  std::string coeffs_out;

  std::string ft_in, ft_out;
  LatticeOpts ft_omega;

  std::string ift_in, ift_out;
  LatticeOpts ift_x;

  unsigned sweep_alpha = 2;
  double sweep_a = -1.0, sweep_b = 1.0;
  std::size_t sweep_n = 0;
  double sweep_h = 0.0;
  LatticeOpts sweep_omega;
  std::string sweep_out;

  std::size_t phantom_size = 512;
  PhantomOpts phantom;
  std::string phantom_out, phantom_pgm;

  PhantomOpts radon_phantom;
  std::size_t radon_size = 512;
  double radon_step = 0.5;
  std::size_t radon_bins = 0;
  std::string radon_detector = "point";
  std::string radon_out;

  PhantomOpts fbp_phantom;
  std::string fbp_sino;
  std::size_t fbp_size = 512;
  double fbp_step = 0.5;
  std::size_t fbp_bins = 0;
  double fbp_band = 0.0;
  std::size_t fbp_num_omega = 0;
  std::string fbp_detector = "point";
  std::string fbp_out, fbp_pgm;
  std::string fbp_mask;

  std::string metrics_test, metrics_ref, metrics_mask;

  std::string verify_level = "fast";
};

Parallelism workers(unsigned threads) {
  return threads == 0 ? Parallelism::hardware() : Parallelism{threads};
}

// Writes to the file, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file_atomic(path, text);
  }
}

std::vector<double> lattice(const LatticeOpts& o, const char* what) {
  if (o.single) {
    if (o.count != 0) {
      throw PreconditionError(std::string("give either a single ") + what + " or a lattice");
    }
    if (!std::isfinite(*o.single)) throw PreconditionError(std::string(what) + " must be finite");
    return {*o.single};
  }
  if (o.count == 0) {
    throw PreconditionError(std::string("missing ") + what + " or " + what + " lattice count");
  }
  if (o.count == 1) {
    if (o.min != o.max) throw PreconditionError(std::string(what) + " lattice of one needs min == max");
    return {o.min};
  }
  return linspace(o.min, o.max, o.count);
}

ct::EllipsePhantom load_phantom(const PhantomOpts& o) {
  if (!o.file.empty()) return io::read_phantom_table(o.file);
  return ct::shepp_logan_phantom(ct::parse_phantom_variant(o.variant));
}

ct::DetectorModel parse_detector(const std::string& name) {
  if (name == "point") return ct::DetectorModel::point;
  if (name == "bin") return ct::DetectorModel::bin_integrated;
  throw PreconditionError("unknown detector model '" + name + "' (expected point|bin)");
}

void print_report(const ct::QualityReport& r, std::ostream& out) {
  const std::string p = ct::to_string(r.region) + ".";
  out << p << "e_max=" << io::format_double(r.e_max) << '\n'
      << p << "mse=" << io::format_double(r.mse) << '\n'
      << p << "psnr=" << io::format_double(r.psnr) << '\n'
      << p << "pixels=" << r.pixel_count << '\n';
}

void print_metrics(const ct::ImageGrid& test, const ct::ImageGrid& ref, const std::string& mask,
                   std::ostream& out) {
  const auto inner = ct::InnerMask::shepp_logan_default();
  std::vector<ct::Region> regions;
  if (mask.empty()) {
    regions = {ct::Region::whole, ct::Region::inner};
  } else {
    regions = {ct::parse_region(mask)};
  }
  for (auto region : regions) print_report(ct::image_metrics(test, ref, region, inner), out);
  if (mask != "whole") out << "inner.mask=" << inner.describe() << '\n';
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const UniformGrid grid(o.coeffs.a, o.coeffs.b, o.coeffs.n);
  emit(o.coeffs_out, io::coefficients_csv(optimal_coefficients(grid, o.coeffs_omega)), out);
  return kOk;
}

int cmd_ft(const Options& o, std::ostream& out) {
  const auto table = io::read_complex_table(o.ft_in, "x");
  const UniformGrid grid = io::require_uniform(table.positions);
  const SampledFunction samples(grid, table.values);
  const auto omegas = lattice(o.ft_omega, "omega");
  const auto spectrum = forward_transform(samples, omegas, workers(o.threads));
  emit(o.ft_out, io::complex_table_csv("omega", spectrum.omegas, spectrum.values), out);
  return kOk;
}

int cmd_ift(const Options& o, std::ostream& out) {
  const auto table = io::read_complex_table(o.ift_in, "omega");
  const UniformGrid grid = io::require_uniform(table.positions);
  const SampledFunction spectrum(grid, table.values);
  const auto xs = lattice(o.ift_x, "x");
  const auto values = inverse_transform(spectrum, xs, workers(o.threads));
  emit(o.ift_out, io::complex_table_csv("x", xs, values), out);
  return kOk;
}

std::size_t subintervals_from_step(double a, double b, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw PreconditionError("--h must be positive");
  const double ratio = (b - a) / h;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9 * n) {
    throw PreconditionError("--h does not divide the interval into a whole number of steps");
  }
  return static_cast<std::size_t>(n);
}

int cmd_error_sweep(const Options& o, std::ostream& out) {
  if ((o.sweep_n == 0) == (o.sweep_h == 0.0)) {
    throw PreconditionError("give exactly one of --n and --h");
  }
  const std::size_t n =
      o.sweep_n != 0 ? o.sweep_n : subintervals_from_step(o.sweep_a, o.sweep_b, o.sweep_h);
  const auto& w = o.sweep_omega;
  std::vector<QuadratureErrorRecord> rows;
  if (w.single) {
    if (w.count != 0) throw PreconditionError("give either a single omega or a lattice");
    rows.push_back(quadrature_error_monomial(o.sweep_alpha, *w.single, o.sweep_a, o.sweep_b, n));
  } else {
    if (w.count < 2) throw PreconditionError("error sweep needs --omega-count >= 2");
    rows = error_sweep(o.sweep_alpha, o.sweep_a, o.sweep_b, n, w.min, w.max, w.count,
                       workers(o.threads));
  }
  emit(o.sweep_out, io::error_sweep_csv(rows), out);
  return kOk;
}

int cmd_phantom(const Options& o, std::ostream& out) {
  if (o.phantom_size < 16) throw PreconditionError("--size must be >= 16");
  const auto img = ct::rasterize(load_phantom(o.phantom), o.phantom_size);
  if (o.phantom_out.empty() && o.phantom_pgm.empty()) {
    throw PreconditionError("phantom needs --out and/or --pgm");
  }
  if (!o.phantom_out.empty()) io::write_image(o.phantom_out, img);
  if (!o.phantom_pgm.empty()) io::write_pgm16(o.phantom_pgm, img);
  out << "rows=" << img.rows() << "\ncols=" << img.cols() << '\n';
  return kOk;
}

ct::Sinogram make_sinogram(const PhantomOpts& phantom, std::size_t size, double step,
                           std::size_t bins, const std::string& detector, unsigned threads) {
  ct::FbpConfig geometry;
  geometry.size = size;
  geometry.num_bins = bins;
  return ct::radon_analytic(load_phantom(phantom), ct::half_rotation(step),
                            ct::resolve_detector(geometry), parse_detector(detector),
                            workers(threads));
}

int cmd_radon(const Options& o, std::ostream& out) {
  if (o.radon_out.empty()) throw PreconditionError("radon needs --out");
  const auto sino = make_sinogram(o.radon_phantom, o.radon_size, o.radon_step, o.radon_bins,
                                  o.radon_detector, o.threads);
  io::write_sinogram(o.radon_out, sino);
  out << "num_angles=" << sino.num_angles << "\nnum_bins=" << sino.num_bins
      << "\nt0=" << io::format_double(sino.t0) << "\ndt=" << io::format_double(sino.dt) << '\n';
  return kOk;
}

int cmd_fbp(const Options& o, std::ostream& out) {
  ct::FbpConfig cfg;
  cfg.size = o.fbp_size;
  cfg.angle_step_deg = o.fbp_step;
  cfg.num_bins = o.fbp_bins;
  cfg.filter.band = o.fbp_band;
  cfg.filter.num_omega = o.fbp_num_omega;
  cfg.detector_model = parse_detector(o.fbp_detector);
  cfg.parallelism = workers(o.threads);
  if (!o.fbp_mask.empty()) ct::parse_region(o.fbp_mask);

  ct::ImageGrid img(16, 16);
  if (!o.fbp_sino.empty()) {
    img = ct::fbp_reconstruct(io::read_sinogram(o.fbp_sino), cfg);
  } else {
    const auto phantom = load_phantom(o.fbp_phantom);
    img = ct::fbp_reconstruct(phantom, cfg);
    print_metrics(img, ct::rasterize(phantom, cfg.size), o.fbp_mask, out);
  }
  if (!o.fbp_out.empty()) io::write_image(o.fbp_out, img);
  if (!o.fbp_pgm.empty()) io::write_pgm16(o.fbp_pgm, img);
  return kOk;
}

int cmd_metrics(const Options& o, std::ostream& out) {
  print_metrics(io::read_image(o.metrics_test), io::read_image(o.metrics_ref), o.metrics_mask,
                out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyLevel level;
  if (o.verify_level == "fast") {
    level = VerifyLevel::fast;
  } else if (o.verify_level == "full") {
    level = VerifyLevel::full;
  } else {
    throw PreconditionError("unknown verify level '" + o.verify_level + "' (expected fast|full)");
  }
  const auto report = run_verification(level);
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name
        << " max_deviation=" << io::format_double(c.max_deviation)
        << " tolerance=" << io::format_double(c.tolerance) << '\n';
  }
  const auto failed = report.failures();
  out << "failures=";
  for (std::size_t k = 0; k < failed.size(); ++k) out << (k ? "," : "") << failed[k];
  out << '\n';
  return failed.empty() ? kOk : kVerifyFailed;
}

void add_lattice(CLI::App* cmd, LatticeOpts& l, const std::string& name) {
  cmd->add_option("--" + name, l.single, "Single " + name + " value");
  cmd->add_option("--" + name + "-min", l.min, "Lattice start")->capture_default_str();
  cmd->add_option("--" + name + "-max", l.max, "Lattice end")->capture_default_str();
  cmd->add_option("--" + name + "-count", l.count, "Lattice size, endpoints included");
}

void add_phantom(CLI::App* cmd, PhantomOpts& p) {
  cmd->add_option("--variant", p.variant, "Shepp-Logan intensities")
      ->check(CLI::IsMember({"modified", "classic"}))
      ->capture_default_str();
  cmd->add_option("--phantom-file", p.file, "Ellipse table CSV: cx,cy,a,b,rotation_deg,intensity");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Optimal quadrature for Fourier integrals, transforms and CT reconstruction",
               "oqf"};
  app.set_config("--config", "", "TOML/INI file with option values (flags take precedence)");
  app.add_flag("--dump-config", o.dump_config, "Print the resolved configuration and exit");
  app.add_option("--threads", o.threads, "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  app.require_subcommand(1);
  app.fallthrough();

  auto* coeffs = app.add_subcommand("coeffs", "Optimal weights as beta,re,im CSV");
  coeffs->add_option("--a", o.coeffs.a)->capture_default_str();
  coeffs->add_option("--b", o.coeffs.b)->capture_default_str();
  coeffs->add_option("--n", o.coeffs.n, "Subintervals")->capture_default_str();
  coeffs->add_option("--omega", o.coeffs_omega, "Frequency in cycles")->capture_default_str();
  coeffs->add_option("--out", o.coeffs_out, "Output CSV (default stdout)");

  auto* ft = app.add_subcommand("ft", "Forward transform of x,re,im samples");
  ft->add_option("--in", o.ft_in, "Samples CSV")->required();
  add_lattice(ft, o.ft_omega, "omega");
  ft->add_option("--out", o.ft_out, "Output CSV (default stdout)");

  auto* ift = app.add_subcommand("ift", "Inverse transform of omega,re,im spectrum");
  ift->add_option("--in", o.ift_in, "Spectrum CSV")->required();
  add_lattice(ift, o.ift_x, "x");
  ift->add_option("--out", o.ift_out, "Output CSV (default stdout)");

  auto* sweep = app.add_subcommand("error-sweep", "Quadrature error for truncated monomials");
  sweep->set_help_flag("--help", "Print this help message and exit");  // frees "h" for --h
  sweep->add_option("--alpha", o.sweep_alpha, "Monomial degree")
      ->check(CLI::Range(0u, 2u))
      ->capture_default_str();
  sweep->add_option("--a", o.sweep_a)->capture_default_str();
  sweep->add_option("--b", o.sweep_b)->capture_default_str();
  sweep->add_option("--n", o.sweep_n, "Subintervals");
  sweep->add_option("--h", o.sweep_h, "Step; must divide b - a");
  add_lattice(sweep, o.sweep_omega, "omega");
  sweep->add_option("--out", o.sweep_out, "Output CSV (default stdout)");

  auto* phantom = app.add_subcommand("phantom", "Rasterize an ellipse phantom");
  phantom->add_option("--size", o.phantom_size)->capture_default_str();
  add_phantom(phantom, o.phantom);
  phantom->add_option("--out", o.phantom_out, "OQFIMG1 output");
  phantom->add_option("--pgm", o.phantom_pgm, "16-bit PGM output (+ .scale.txt sidecar)");

  auto* radon = app.add_subcommand("radon", "Analytic sinogram over a half rotation");
  add_phantom(radon, o.radon_phantom);
  radon->add_option("--size", o.radon_size, "Image size that sets the detector spacing 2/size")
      ->capture_default_str();
  radon->add_option("--angles-step-deg", o.radon_step)->capture_default_str();
  radon->add_option("--num-bins", o.radon_bins, "Detector bins (0 = default for size)")
      ->capture_default_str();
  radon->add_option("--detector", o.radon_detector, "point samples or bin averages")
      ->check(CLI::IsMember({"point", "bin"}))
      ->capture_default_str();
  radon->add_option("--out", o.radon_out, "OQFSINO1 output");

  auto* fbp = app.add_subcommand("fbp", "Filtered back-projection");
  add_phantom(fbp, o.fbp_phantom);
  fbp->add_option("--sino", o.fbp_sino, "Reconstruct this OQFSINO1 file instead of a phantom");
  fbp->add_option("--size", o.fbp_size)->capture_default_str();
  fbp->add_option("--angles-step-deg", o.fbp_step)->capture_default_str();
  fbp->add_option("--num-bins", o.fbp_bins, "Detector bins (0 = default for size)")
      ->capture_default_str();
  fbp->add_option("--band", o.fbp_band, "Filter band (0 = detector Nyquist)")
      ->capture_default_str();
  fbp->add_option("--num-omega", o.fbp_num_omega, "Frequency samples (0 = 2 bins + 1)")
      ->capture_default_str();
  fbp->add_option("--detector", o.fbp_detector, "point samples or bin averages")
      ->check(CLI::IsMember({"point", "bin"}))
      ->capture_default_str();
  fbp->add_option("--mask", o.fbp_mask, "Metrics region (default both)")
      ->check(CLI::IsMember({"whole", "inner"}));
  fbp->add_option("--out", o.fbp_out, "OQFIMG1 output");
  fbp->add_option("--pgm", o.fbp_pgm, "16-bit PGM output (+ .scale.txt sidecar)");

  auto* metrics = app.add_subcommand("metrics", "E_max, MSE and PSNR of two OQFIMG1 images");
  metrics->add_option("--test", o.metrics_test)->required();
  metrics->add_option("--ref", o.metrics_ref)->required();
  metrics->add_option("--mask", o.metrics_mask, "Region (default both)")
      ->check(CLI::IsMember({"whole", "inner"}));

  auto* verify = app.add_subcommand("verify", "Closed form against the oracle suite");
  verify->add_option("--level", o.verify_level)
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("oqf");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::FileError& e) {
    err << "oqf: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ParseError& e) {
    err << "oqf: " << e.what() << '\n';
    return kUsage;
  }

  if (o.dump_config) {
    std::istringstream dumped(app.config_to_str(true, false));
    for (std::string line; std::getline(dumped, line);) {
      const bool unset = line.size() >= 2 && line.compare(line.size() - 2, 2, "\"\"") == 0;
      if (!unset && line.rfind("dump-config", 0) != 0) out << line << '\n';
    }
    return kOk;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(o, out);
    if (ft->parsed()) return cmd_ft(o, out);
    if (ift->parsed()) return cmd_ift(o, out);
    if (sweep->parsed()) return cmd_error_sweep(o, out);
    if (phantom->parsed()) return cmd_phantom(o, out);
    if (radon->parsed()) return cmd_radon(o, out);
    if (fbp->parsed()) return cmd_fbp(o, out);
    if (metrics->parsed()) return cmd_metrics(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const PreconditionError& e) {
    err << "oqf: invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    err << "oqf: invalid parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    err << "oqf: validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const FormatError& e) {
    err << "oqf: format error: " << e.what() << '\n';
    return kValidation;
  } catch (const IoError& e) {
    err << "oqf: i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "oqf: internal error: " << e.what() << '\n';
    return kInternal;
  }
  err << "oqf: no subcommand\n";
  return kUsage;
}

}  // namespace oqf::cli
