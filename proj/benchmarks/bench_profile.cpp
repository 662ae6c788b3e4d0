#include <benchmark/benchmark.h>

#include "lgh/profile.hpp"

using namespace lgh;

namespace {

void BM_SolveStaticField(benchmark::State& state, PhaseKernel kernel) {
  ChargeProfileSpec spec;
  const int n = static_cast<int>(state.range(0));
  spec.grid = {n, n, n};
  spec.kernel = kernel;
  spec.screening_mass = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_static_field(spec));
  state.SetItemsProcessed(state.iterations() * n * n * n);
}

}  // namespace

BENCHMARK_CAPTURE(BM_SolveStaticField, coulomb, PhaseKernel::coulomb)
    ->Arg(16)
    ->Arg(32);
BENCHMARK_CAPTURE(BM_SolveStaticField, higgs, PhaseKernel::higgs)
    ->Arg(16)
    ->Arg(32);

BENCHMARK_MAIN();
