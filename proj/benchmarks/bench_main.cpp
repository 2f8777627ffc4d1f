#include <benchmark/benchmark.h>

#include "swp/analytic.hpp"
#include "swp/oracle.hpp"
#include "swp/quadrature.hpp"
#include "swp/shell.hpp"

using namespace swp;

namespace {

const CollisionConfig kCfg(0.01, 1.0, 10.0);
const PhaseShiftModel kModel = HardSphere{1.0};

void bm_gauss_legendre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // First call builds the rule; steady state measures cache lookup + remap.
  for (auto _ : state)
    benchmark::DoNotOptimize(gauss_legendre(n).mapped(0.0, 2.0));
}
BENCHMARK(bm_gauss_legendre)->Arg(50)->Arg(200);

void bm_epsilon_sq_closed_form(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_sq(kCfg, kModel));
}
BENCHMARK(bm_epsilon_sq_closed_form);

void bm_epsilon_sq_quadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(epsilon_sq_quadrature(kCfg, kModel, n));
}
BENCHMARK(bm_epsilon_sq_quadrature)->Arg(100)->Arg(200);

void bm_overlap_I1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(overlap_I1(kCfg, kModel, n));
}
BENCHMARK(bm_overlap_I1)->Arg(100)->Arg(200);

void bm_mc_overlap(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mc_overlap_I2_I3(kCfg, kModel, n, 42));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(n));
}
BENCHMARK(bm_mc_overlap)->Arg(100000)->Arg(400000)->Unit(benchmark::kMillisecond);

void bm_shell_decompose(benchmark::State& state) {
  const CollisionConfig cfg(0.2, 1.0, 0.0);
  RadialGridSpec spec;
  spec.n_radial = static_cast<int>(state.range(0));
  spec.n_angular = 200;
  for (auto _ : state)
    benchmark::DoNotOptimize(shell_sector_decompose(cfg, kModel, 48, spec));
}
BENCHMARK(bm_shell_decompose)->Arg(48)->Arg(96)->Unit(benchmark::kMillisecond);

void bm_shell_purity_from_sectors(benchmark::State& state) {
  const CollisionConfig cfg(0.2, 1.0, 0.0);
  RadialGridSpec spec;
  spec.n_radial = 96;
  const auto d = shell_sector_decompose(cfg, kModel, 48, spec);
  for (auto _ : state) benchmark::DoNotOptimize(shell_purity(d));
}
BENCHMARK(bm_shell_purity_from_sectors);

}  // namespace

BENCHMARK_MAIN();
