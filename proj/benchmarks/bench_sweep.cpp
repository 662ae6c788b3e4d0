#include <benchmark/benchmark.h>

#include "lgh/engine.hpp"
#include "lgh/sweep_kernel.hpp"

using namespace lgh;

namespace {

// full Metropolis sweeps through the public entry point (kernel bound per
// sweep, as metropolis_sweep does)
void BM_MetropolisSweep(benchmark::State& state, ModelPreset preset,
                        Sector sector) {
  const int extent = static_cast<int>(state.range(0));
  auto geom = std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(extent));
  FieldConfiguration cfg = init_config(geom, StartKind::hot, sector, 23);
  const Couplings cpl = preset_couplings(preset, 0.3, 1.0, 0.2);
  Rng rng(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(metropolis_sweep(cfg, cpl, 1.0, 1.0, rng));
  const std::int64_t vars =
      geom->link_count() + (sector == Sector::higgs ? geom->volume() : 0);
  state.SetItemsProcessed(state.iterations() * vars);
}

void BM_KernelLinkDelta(benchmark::State& state) {
  auto geom = std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(8));
  FieldConfiguration cfg = init_config(geom, StartKind::hot, Sector::unitary, 3);
  const Couplings cpl = preset_couplings(ModelPreset::PL, 0.0, 1.0, 0.2);
  SweepKernel kernel(*geom, cpl);
  kernel.bind(cfg);
  int s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.link_delta(s, 2, 0.9));
    s = (s + 1) % geom->volume();
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_MetropolisSweep, pure_gauge_unitary, ModelPreset::PL,
                  Sector::unitary)
    ->Arg(4)
    ->Arg(8);
BENCHMARK_CAPTURE(BM_MetropolisSweep, ip_unitary, ModelPreset::IP,
                  Sector::unitary)
    ->Arg(8);
BENCHMARK_CAPTURE(BM_MetropolisSweep, itpls_higgs, ModelPreset::ItPLs,
                  Sector::higgs)
    ->Arg(4)
    ->Arg(8);
BENCHMARK(BM_KernelLinkDelta);

BENCHMARK_MAIN();
