#include <benchmark/benchmark.h>

#include <cmath>

#include "oqf/ct/fbp.hpp"
#include "oqf/ct/phantom.hpp"
#include "oqf/ct/radon.hpp"
#include "oqf/fourier.hpp"
#include "oqf/quadrature.hpp"

namespace {

void BM_Coefficients(benchmark::State& state) {
  const oqf::UniformGrid grid(-1.0, 1.0, static_cast<std::size_t>(state.range(0)));
  std::vector<oqf::Complex> out(grid.size());
  double omega = 0.37;
  for (auto _ : state) {
    oqf::fill_optimal_coefficients(grid, omega, out);
    benchmark::DoNotOptimize(out.data());
    omega += 1e-9;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}
BENCHMARK(BM_Coefficients)->Arg(20)->Arg(200)->Arg(2000)->Arg(20000);

void BM_ForwardTransform(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const oqf::UniformGrid grid(-5.0, 5.0, n);
  const auto samples = oqf::SampledFunction::from_function(
      grid, [](double x) { return 1.0 / (1.0 + x * x); });
  const auto omegas = oqf::linspace(-5.0, 5.0, 1001);
  for (auto _ : state) {
    auto spectrum = oqf::forward_transform(samples, omegas);
    benchmark::DoNotOptimize(spectrum.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size() * omegas.size()));
}
BENCHMARK(BM_ForwardTransform)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_RadonAnalytic(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  const auto phantom = oqf::ct::shepp_logan_phantom();
  for (auto _ : state) {
    auto sino = oqf::ct::radon_analytic(phantom, oqf::ct::half_rotation(1.0),
                                        oqf::ct::default_detector(size));
    benchmark::DoNotOptimize(sino.data.data());
  }
}
BENCHMARK(BM_RadonAnalytic)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_FbpReconstruct(benchmark::State& state) {
  oqf::ct::FbpConfig cfg;
  cfg.size = static_cast<std::size_t>(state.range(0));
  cfg.angle_step_deg = 1.0;
  const auto phantom = oqf::ct::shepp_logan_phantom();
  for (auto _ : state) {
    auto img = oqf::ct::fbp_reconstruct(phantom, cfg);
    benchmark::DoNotOptimize(img.pixels().data());
  }
}
BENCHMARK(BM_FbpReconstruct)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
