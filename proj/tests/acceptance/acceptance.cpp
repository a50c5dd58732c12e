// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oqf/ct/fbp.hpp"
#include "oqf/ct/metrics.hpp"
#include "oqf/ct/phantom.hpp"
#include "oqf/ct/radon.hpp"
#include "oqf/fourier.hpp"
#include "oqf/io/formats.hpp"
#include "oqf/oracle.hpp"
#include "oqf/quadrature.hpp"
#include "oracles.hpp"

namespace {

using oqf::Complex;
using oqf::SampledFunction;
using oqf::UniformGrid;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  // Records a failed sub-check without stopping the criterion.
  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> re(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (auto z : v) out.push_back(z.real());
  return out;
}

std::vector<double> im(const std::vector<Complex>& v) {
  std::vector<double> out;
  for (auto z : v) out.push_back(z.imag());
  return out;
}

void oracle_equivalence(Outcome& r) {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0, worst_p0 = 0.0;
  for (std::size_t n = 2; n <= 32; ++n) {
    for (double w : {0.1, 0.3, 1.0, 2.7, 5.0, 10.0}) {
      const auto sys = oqf::oracle::solve_coefficient_system(n, w);
      const auto c = oqf::optimal_coefficients(UniformGrid(0.0, 1.0, n), w).values;
      for (std::size_t k = 0; k <= n; ++k) {
        worst = std::max(worst, std::abs(c[k] - sys.coefficients[k]));
      }
      worst_p0 = std::max(worst_p0, std::abs(sys.p0));
    }
  }
  const double t = seconds_since(t0);
  r.detail << "max|dC|=" << worst << " max|p0|=" << worst_p0 << " time=" << t << "s";
  r.require(worst < 1e-9, "weights 1e-9");
  r.require(worst_p0 < 1e-10, "p0 1e-10");
  r.require(t < 5.0, "runtime 5 s");
}

void norm_cross_check(Outcome& r) {
  double worst = 0.0;
  for (std::size_t n : {4u, 8u, 16u}) {
    for (double w : {0.3, 1.0, 2.7}) {
      const auto c = oqf::optimal_coefficients(UniformGrid(0.0, 1.0, n), w).values;
      const double brute = oqf::oracle::error_norm_bruteforce(re(c), im(c), w, n);
      const double closed = oqf::error_norm(w, 1.0 / static_cast<double>(n)).norm_sq;
      worst = std::max(worst, std::abs(brute - closed));
    }
  }
  double trap = 0.0;
  for (double h : {1.0, 0.5, 0.1, 0.01, 1e-3}) {
    trap = std::max(trap, std::abs(oqf::error_norm(0.0, h).norm_sq / (h * h / 12.0) - 1.0));
  }
  double aligned = 0.0;
  for (double h : {0.1, 0.25, 0.5}) {
    for (int k : {1, 2, 3, -4, 7}) {
      const double w = k / h;
      const double want = 1.0 / ((2 * kPi * w) * (2 * kPi * w));
      aligned = std::max(aligned, std::abs(oqf::error_norm(w, h).norm_sq / want - 1.0));
    }
  }
  r.detail << "max|brute-closed|=" << worst << " rel(h^2/12)=" << trap
           << " rel(1/(2 pi w)^2)=" << aligned;
  r.require(worst < 1e-9, "brute force 1e-9");
  r.require(trap <= 1e-13, "h^2/12");
  r.require(aligned <= 1e-13, "1/(2 pi w)^2");
}

void exactness(Outcome& r) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ends(-20.0, 20.0), freq(-15.0, 15.0);
  std::uniform_int_distribution<std::size_t> sizes(1, 400);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    double a = ends(rng), b = ends(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) b = a + 1.0;
    const UniformGrid g(a, b, sizes(rng));
    const double w = freq(rng);
    const auto c = oqf::optimal_coefficients(g, w);
    for (unsigned alpha : {0u, 1u}) {
      const auto s = SampledFunction::from_function(
          g, [alpha](double x) { return alpha == 0 ? 1.0 : x; });
      const Complex want = oqf::testing::monomial_integral_numeric(alpha, w, a, b);
      double scale = std::abs(want);
      double terms = 0.0;
      for (std::size_t k = 0; k < g.size(); ++k) terms += std::abs(c.values[k] * s.values[k]);
      scale = std::max(scale, terms);
      worst = std::max(worst, std::abs(oqf::apply_quadrature(c, s) - want) / scale);
    }
  }
  r.detail << "max relative error=" << worst;
  r.require(worst <= 1e-12, "relative 1e-12");
}

void small_step_expansion(Outcome& r) {
  const double w = 1.0;
  for (double h : {1e-2, 1e-3}) {
    const double ns = oqf::error_norm(w, h).norm_sq;
    const double approx = h * h / 12.0 - kPi * kPi * w * w * std::pow(h, 4) / 90.0;
    const double bound = 2.0 * std::pow(kPi * w, 4) * std::pow(h, 6) / 1260.0;
    r.detail << "h=" << h << ": dev=" << std::abs(ns - approx) << " bound=" << bound << "; ";
    r.require(std::abs(ns - approx) < bound, "h=" + std::to_string(h));
  }
}

void second_order(Outcome& r) {
  const auto t0 = std::chrono::steady_clock::now();
  int used = 0;
  for (double w : {0.25, 0.5, 0.75, 1.0}) {
    const double coarse = oqf::quadrature_error_monomial(2, w, -1.0, 1.0, 20).abs_real_error;
    const double fine = oqf::quadrature_error_monomial(2, w, -1.0, 1.0, 200).abs_real_error;
    if (fine < 1e-13) {
      r.detail << "w=" << w << ": excluded (fine error " << fine << "); ";
      continue;
    }
    ++used;
    const double ratio = coarse / fine;
    r.detail << "w=" << w << ": ratio=" << ratio << "; ";
    r.require(ratio >= 50.0 && ratio <= 200.0, "ratio at w=" + std::to_string(w));
  }
  const double t = seconds_since(t0);
  r.detail << "time=" << t << "s";
  r.require(used > 0, "at least one frequency measured");
  r.require(t < 1.0, "runtime 1 s");
}

void machine_zero_rows(Outcome& r) {
  double worst0 = 0.0, worst1 = 0.0;
  for (double h : {0.1, 0.01}) {
    const auto n1 = static_cast<std::size_t>(std::lround(2.0 / h));
    for (const auto& row : oqf::error_sweep(0, -1.0, 1.0, n1, -1.0, 1.0, 201)) {
      worst0 = std::max(worst0, row.abs_real_error);
    }
    for (double half : {1.0, 10.0, 100.0}) {
      const auto n = static_cast<std::size_t>(std::lround(2.0 * half / h));
      for (const auto& row : oqf::error_sweep(1, -half, half, n, -half, half, 201)) {
        worst1 = std::max(worst1, row.abs_real_error);
      }
    }
  }
  r.detail << "max|Re R| f0=" << worst0 << " f1=" << worst1;
  r.require(worst0 < 1e-11, "f0");
  r.require(worst1 < 1e-11, "f1");
}

double box(double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; }
double lorentz(double x) { return 1.0 / (1.0 + x * x); }

std::vector<Complex> round_trip(double (*f)(double), double half, const std::vector<double>& xs) {
  const UniformGrid xg(-half, half, static_cast<std::size_t>(std::lround(2.0 * half / 0.1)));
  const UniformGrid wg(-half, half, static_cast<std::size_t>(std::lround(2.0 * half / 0.01)));
  const auto spectrum = oqf::forward_transform(SampledFunction::from_function(xg, f), wg.nodes());
  return oqf::inverse_transform(SampledFunction(wg, spectrum.values), xs);
}

void reconstruction_trend(Outcome& r) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto xs_box = oqf::linspace(-2.0, 2.0, 41);
  const auto xs_phi = oqf::linspace(-1.0, 1.0, 21);
  double prev_box = INFINITY, prev_phi = INFINITY;
  for (double half : {1.0, 5.0, 25.0}) {
    const auto fb = round_trip(box, half, xs_box);
    const auto fp = round_trip(lorentz, half, xs_phi);
    double eb = 0.0, ep = 0.0;
    for (std::size_t k = 0; k < xs_box.size(); ++k) eb = std::max(eb, std::abs(fb[k] - box(xs_box[k])));
    for (std::size_t k = 0; k < xs_phi.size(); ++k) ep = std::max(ep, std::abs(fp[k] - lorentz(xs_phi[k])));
    r.require(eb < prev_box && ep < prev_phi, "decrease at L=" + std::to_string(half));

    // Error location for phi over the whole reconstruction interval.
    const auto xs = oqf::linspace(-half, half, static_cast<std::size_t>(std::lround(20 * half)) + 1);
    const auto full = round_trip(lorentz, half, xs);
    std::size_t arg = 0;
    double worst = -1.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const double e = std::abs(full[k] - lorentz(xs[k]));
      if (e > worst) {
        worst = e;
        arg = k;
      }
    }
    r.detail << "L=" << half << ": box=" << eb << " phi=" << ep << " argmax=" << xs[arg] << "; ";
    r.require(half - std::abs(xs[arg]) <= 0.05 * 2.0 * half, "argmax at L=" + std::to_string(half));
    prev_box = eb;
    prev_phi = ep;
  }
  const double t = seconds_since(t0);
  r.detail << "time=" << t << "s";
  r.require(t < 30.0, "runtime 30 s");
}

double desk_psnr(double step_deg) {
  oqf::ct::FbpConfig cfg;
  cfg.size = 128;
  cfg.angle_step_deg = step_deg;
  cfg.parallelism = oqf::Parallelism{1};
  const auto phantom = oqf::ct::shepp_logan_phantom();
  const auto img = oqf::ct::fbp_reconstruct(phantom, cfg);
  return oqf::ct::image_metrics(img, oqf::ct::rasterize(phantom, 128), oqf::ct::Region::whole).psnr;
}

void ct_desk(Outcome& r) {
  const auto t0 = std::chrono::steady_clock::now();
  const double one_degree = desk_psnr(1.0);
  const double t = seconds_since(t0);
  r.detail << "1 deg: PSNR=" << one_degree << " time=" << t << "s; counts";
  r.require(one_degree > 20.0, "PSNR > 20");
  r.require(t < 60.0, "runtime 60 s");
  double prev = -INFINITY;
  for (double count : {45.0, 90.0, 180.0, 360.0}) {
    const double p = desk_psnr(180.0 / count);
    r.detail << " " << count << ":" << p;
    r.require(p >= prev - 0.1, "monotone at " + std::to_string(static_cast<int>(count)));
    prev = std::max(prev, p);
  }
}

void ct_full_scale(Outcome& r) {
  const auto t0 = std::chrono::steady_clock::now();
  oqf::ct::FbpConfig cfg;
  cfg.size = 512;
  cfg.angle_step_deg = 0.5;
  cfg.parallelism = oqf::Parallelism{1};
  const auto phantom = oqf::ct::shepp_logan_phantom();
  const auto img = oqf::ct::fbp_reconstruct(phantom, cfg);
  const double t = seconds_since(t0);
  const auto ref = oqf::ct::rasterize(phantom, 512);
  const auto whole = oqf::ct::image_metrics(img, ref, oqf::ct::Region::whole);
  const auto inner = oqf::ct::image_metrics(img, ref, oqf::ct::Region::inner);
  r.detail << "whole E_max=" << whole.e_max << " MSE=" << whole.mse << " PSNR=" << whole.psnr
           << "; inner E_max=" << inner.e_max << " MSE=" << inner.mse << " PSNR=" << inner.psnr
           << "; time=" << t << "s single-threaded";
  r.require(whole.psnr >= 27.5 && whole.psnr <= 31.5, "whole PSNR in [27.5, 31.5]");
  r.require(inner.psnr >= whole.psnr + 5.0, "inner >= whole + 5 dB");
  r.require(t < 900.0, "runtime 15 min");
}

void property_suites(Outcome& r) {
  // Linearity and conjugate symmetry of the forward transform.
  const UniformGrid g(-2.0, 3.0, 50);
  const auto omegas = oqf::linspace(-4.0, 4.0, 33);
  const auto f = SampledFunction::from_function(g, [](double x) { return std::cos(x); });
  const auto k = SampledFunction::from_function(g, [](double x) { return x * x; });
  std::vector<Complex> mix(g.size());
  const Complex s(0.7, -1.3), q(-2.1, 0.4);
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = s * f.values[i] + q * k.values[i];
  const auto F = oqf::forward_transform(f, omegas);
  const auto K = oqf::forward_transform(k, omegas);
  const auto M = oqf::forward_transform(SampledFunction(g, mix), omegas);
  double lin = 0.0, sym = 0.0;
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    lin = std::max(lin, std::abs(M.values[i] - (s * F.values[i] + q * K.values[i])));
    sym = std::max(sym, std::abs(F.values[omegas.size() - 1 - i] - std::conj(F.values[i])));
  }
  r.require(lin < 1e-12, "linearity");
  r.require(sym < 1e-12, "conjugate symmetry");

  // Mass conservation of the bin-integrated detector.
  const auto phantom = oqf::ct::shepp_logan_phantom();
  const auto sino = oqf::ct::radon_analytic(phantom, oqf::ct::half_rotation(2.0),
                                            oqf::ct::default_detector(128),
                                            oqf::ct::DetectorModel::bin_integrated);
  double mass = 0.0;
  const double total = phantom.total_integral();
  for (double m : oqf::ct::projection_mass(sino)) mass = std::max(mass, std::abs(m - total) / total);
  r.require(mass < 1e-6, "mass conservation");

  // Discrete operator identities.
  bool identities = true;
  for (double h : {0.5, 0.1, 0.01}) {
    identities = identities && oqf::oracle::discrete_operator_identities(h, 12).all_passed();
  }
  r.require(identities, "discrete operator identities");

  // Zero-sum perturbations of the optimal weights raise the norm.
  std::mt19937_64 rng(9);
  std::normal_distribution<double> gauss;
  bool minimal = true;
  for (double w : {0.3, 2.7}) {
    const std::size_t n = 8;
    const auto c = oqf::optimal_coefficients(UniformGrid(0.0, 1.0, n), w).values;
    const double base = oqf::oracle::error_norm_bruteforce(re(c), im(c), w, n);
    for (int trial = 0; trial < 10; ++trial) {
      auto pr = re(c), pi = im(c);
      std::vector<double> dr(n + 1), di(n + 1);
      for (std::size_t j = 0; j <= n; ++j) {
        dr[j] = gauss(rng);
        di[j] = gauss(rng);
      }
      const double mr = std::accumulate(dr.begin(), dr.end(), 0.0) / (n + 1);
      const double mi = std::accumulate(di.begin(), di.end(), 0.0) / (n + 1);
      for (std::size_t j = 0; j <= n; ++j) {
        pr[j] += 1e-2 * (dr[j] - mr);
        pi[j] += 1e-2 * (di[j] - mi);
      }
      minimal = minimal && oqf::oracle::error_norm_bruteforce(pr, pi, w, n) > base;
    }
  }
  r.require(minimal, "constrained minimality");

  // File round trip and determinism across thread counts.
  const auto bytes = oqf::io::encode_sinogram(sino);
  r.require(oqf::io::encode_sinogram(oqf::io::decode_sinogram(bytes)) == bytes, "sinogram round trip");
  oqf::ct::FbpConfig cfg;
  cfg.size = 48;
  cfg.angle_step_deg = 6.0;
  cfg.parallelism = oqf::Parallelism{1};
  const auto one = oqf::ct::fbp_reconstruct(phantom, cfg);
  cfg.parallelism = oqf::Parallelism{3};
  const auto three = oqf::ct::fbp_reconstruct(phantom, cfg);
  r.require(one.pixels() == three.pixels(), "determinism");
  r.require(oqf::io::encode_image(oqf::io::decode_image(oqf::io::encode_image(one))) ==
                oqf::io::encode_image(one),
            "image round trip");
  r.detail << "linearity=" << lin << " symmetry=" << sym << " mass=" << mass;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"coefficient_oracle_equivalence", oracle_equivalence},
      {"norm_cross_check", norm_cross_check},
      {"exactness_suite", exactness},
      {"small_step_norm_expansion", small_step_expansion},
      {"second_order_error", second_order},
      {"machine_zero_rows", machine_zero_rows},
      {"reconstruction_trend_1d", reconstruction_trend},
      {"ct_desk_scale", ct_desk},
      {"ct_full_scale", ct_full_scale},
      {"property_suites", property_suites},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      check(r);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail << " [exception: " << e.what() << "]";
    }
    const double t = seconds_since(t0);
    std::printf("%s %s (%.2f s) %s\n", r.passed ? "PASS" : "FAIL", name, t, r.detail.str().c_str());
    std::fflush(stdout);
    if (!r.passed) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
