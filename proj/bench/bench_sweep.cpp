// Serial reference sweep against the OpenMP sweep. Audit mode (no pruning)
// keeps the work per group fixed so worker counts are comparable.

#include <benchmark/benchmark.h>

#include "sepnoether/beta_sep.hpp"

using namespace sepnoether;

namespace {

const char* const kGroups[] = {"4,4", "6,6", "3,3,3", "2,2,2,2", "12,4"};

SweepOptions options(bool audit, int workers) {
  SweepOptions o = audit ? SweepOptions::audit() : SweepOptions{};
  o.workers = workers;
  return o;
}

void BM_Reference(benchmark::State& state) {
  GroupSpec g = GroupSpec::parse(kGroups[state.range(0)]);
  SweepOptions o = options(state.range(1) != 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(beta_sep_reference(g, o).value);
  state.SetLabel(g.to_alias() + (o.early_exit ? "" : " audit"));
}

void BM_Parallel(benchmark::State& state) {
  GroupSpec g = GroupSpec::parse(kGroups[state.range(0)]);
  SweepOptions o = options(state.range(1) != 0, static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(beta_sep(g, o).value);
  state.SetLabel(g.to_alias() + (o.early_exit ? "" : " audit") + " x" + std::to_string(o.workers));
}

void reference_args(benchmark::internal::Benchmark* b) {
  for (int g = 0; g < 5; ++g)
    for (int audit : {0, 1}) b->Args({g, audit});
}

void parallel_args(benchmark::internal::Benchmark* b) {
  for (int g = 0; g < 5; ++g)
    for (int audit : {0, 1})
      for (int w : {1, 2, 4, 8}) b->Args({g, audit, w});
}

}  // namespace

BENCHMARK(BM_Reference)->Apply(reference_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
