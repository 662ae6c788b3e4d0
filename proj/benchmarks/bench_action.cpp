#include <benchmark/benchmark.h>

#include "lgh/action.hpp"
#include "lgh/engine.hpp"
#include "lgh/oracles.hpp"

using namespace lgh;

namespace {

FieldConfiguration hot_config(int extent, Sector sector) {
  auto geom = std::make_shared<LatticeGeometry>(LatticeGeometry::cubic(extent));
  return init_config(geom, StartKind::hot, sector, 17);
}

void BM_TotalAction(benchmark::State& state) {
  const auto cfg = hot_config(static_cast<int>(state.range(0)), Sector::higgs);
  const Couplings cpl = preset_couplings(ModelPreset::ItPLs, 0.3, 1.0, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(total_action(cfg, cpl));
  state.SetItemsProcessed(state.iterations() * cfg.g().volume());
}
BENCHMARK(BM_TotalAction)->Arg(4)->Arg(8);

void BM_BruteForceAction(benchmark::State& state) {
  const auto cfg = hot_config(static_cast<int>(state.range(0)), Sector::higgs);
  const Couplings cpl = preset_couplings(ModelPreset::ItPLs, 0.3, 1.0, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_action(cfg, cpl));
  state.SetItemsProcessed(state.iterations() * cfg.g().volume());
}
BENCHMARK(BM_BruteForceAction)->Arg(4);

void BM_LinkDeltaReference(benchmark::State& state) {
  const auto cfg = hot_config(4, Sector::higgs);
  const Couplings cpl = preset_couplings(ModelPreset::ItPLs, 0.3, 1.0, 0.2);
  int s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(link_action_delta(cfg, s, 1, 0.7, cpl));
    s = (s + 1) % cfg.g().volume();
  }
}
BENCHMARK(BM_LinkDeltaReference);

}  // namespace

BENCHMARK_MAIN();
