#include <benchmark/benchmark.h>

#include "loewner/refinements.hpp"
#include "loewner/registry.hpp"

using namespace loewner;

namespace {

void BM_FracPower(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const HpdMatrix a = random_hpd(n, 1e3, 1u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(frac_power(a, 0.37));
  }
}
BENCHMARK(BM_FracPower)->Arg(4)->Arg(16)->Arg(64);

void BM_GeometricMean(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const HpdMatrix a = random_hpd(n, 1e3, 2u);
  const HpdMatrix b = random_hpd(n, 1e3, 3u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_mean(a, b, 0.3));
  }
}
BENCHMARK(BM_GeometricMean)->Arg(4)->Arg(16)->Arg(64);

void BM_SharpFamilyReuse(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const HpdMatrix a = random_hpd(n, 1e3, 4u);
  const HpdMatrix b = random_hpd(n, 1e3, 5u);
  const WeightedGeometricFamily fam(a, b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fam.sharp(0.81));
  }
}
BENCHMARK(BM_SharpFamilyReuse)->Arg(4)->Arg(16)->Arg(64);

void BM_SeriesUpperBound(benchmark::State& state) {
  const HpdMatrix a = random_hpd(8, 1e4, 6u);
  const HpdMatrix b = random_hpd(8, 1e4, 7u);
  const int terms = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sababheh_upper(a, b, 0.3, terms));
  }
}
BENCHMARK(BM_SeriesUpperBound)->Arg(1)->Arg(4)->Arg(8);

void BM_Trial(benchmark::State& state, const char* id, const char* map_kind) {
  TrialParams params;
  params.inequality_id = id;
  params.seed = 99;
  params.dim = 4;
  params.t = 0.3;
  params.map_kind = map_kind;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(params));
  }
}
BENCHMARK_CAPTURE(BM_Trial, kitt, "kitt", "");
BENCHMARK_CAPTURE(BM_Trial, ando_rev, "ando_rev", "block_diag_sum");
BENCHMARK_CAPTURE(BM_Trial, holder_rev, "holder_rev", "");

}  // namespace

BENCHMARK_MAIN();
