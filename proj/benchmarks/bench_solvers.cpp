// Microbenchmarks for the geometry kernels and the full solvers at small
// problem sizes. Build with -DROTSYNC_BUILD_BENCHMARKS=ON (default when
// google-benchmark is installed).

#include <benchmark/benchmark.h>

#include "rotsync/cemp.hpp"
#include "rotsync/irls.hpp"
#include "rotsync/mpls.hpp"
#include "rotsync/synth.hpp"

namespace {

using namespace rotsync;

void BM_ExpMap(benchmark::State& state) {
  Rng rng(1);
  const TangentVector w(rng.Normal(), rng.Normal(), rng.Normal());
  for (auto _ : state) {
    benchmark::DoNotOptimize(so3::ExpMap(w));
  }
}
BENCHMARK(BM_ExpMap);

void BM_LogMap(benchmark::State& state) {
  Rng rng(2);
  const Rotation r = so3::SampleHaar(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(so3::LogMap(r));
  }
}
BENCHMARK(BM_LogMap);

void BM_GeodesicDistance(benchmark::State& state) {
  Rng rng(3);
  const Rotation a = so3::SampleHaar(rng);
  const Rotation b = so3::SampleHaar(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(so3::GeodesicDistance(a, b));
  }
}
BENCHMARK(BM_GeodesicDistance);

void BM_ProjectToSO3(benchmark::State& state) {
  Rng rng(4);
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) m(r, c) = rng.Normal();
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(so3::ProjectToSO3(m));
  }
}
BENCHMARK(BM_ProjectToSO3);

void BM_CempRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SyntheticInstance inst = GenUniform(n, 0.5, 0.3, 0.0, 5);
  CycleTable table = SampleCycles(*inst.graph, 50, Rng(6));
  ComputeCycleInconsistencies(*inst.graph, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CempRun(*inst.graph, table, CempConfig{}));
  }
  state.SetComplexityN(inst.graph->NumEdges());
}
BENCHMARK(BM_CempRun)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_MplsSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SyntheticInstance inst = GenUniform(n, 0.5, 0.3, 0.05, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MplsSolve(*inst.graph, MplsConfig{}, Rng(8)));
  }
}
BENCHMARK(BM_MplsSolve)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_IrlsSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SyntheticInstance inst = GenUniform(n, 0.5, 0.3, 0.05, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(IrlsSolve(*inst.graph, IrlsConfig{}));
  }
}
BENCHMARK(BM_IrlsSolve)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
