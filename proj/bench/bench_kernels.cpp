// Serial reference against the OpenMP kernels. Run with --benchmark_filter to
// pick one family; set OMP_NUM_THREADS to vary the thread count.

#include "bidepo/numeric_oracle.hpp"
#include "bidepo/region_grid.hpp"

#include <benchmark/benchmark.h>

using namespace bidepo;

static Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? Exec::parallel : Exec::serial;
}

static void BM_Sweep(benchmark::State& state) {
  GridSpec spec;
  spec.dims = Dims(2, 6);
  const int steps = int(state.range(1));
  for (auto& a : spec.axes) a = Axis{-1.0, 2.0, steps};
  for (auto _ : state) {
    RegionGrid g = sweep(spec, exec_of(state));
    benchmark::DoNotOptimize(g.cells.data());
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(spec.cell_count()));
}
BENCHMARK(BM_Sweep)->ArgNames({"parallel", "steps"})->ArgsProduct({{0, 1}, {31, 61}})->Unit(benchmark::kMillisecond);

static void BM_OraclePositive(benchmark::State& state) {
  const PhiParams p{0.3, -0.7, 0.4, Dims(3, 4)};
  const std::size_t samples = std::size_t(state.range(1));
  for (auto _ : state) {
    OracleVerdict v = oracle_positive(p, samples, 1, exec_of(state));
    benchmark::DoNotOptimize(v.worst);
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(samples));
}
BENCHMARK(BM_OraclePositive)->ArgNames({"parallel", "samples"})->ArgsProduct({{0, 1}, {500, 2000}})->Unit(benchmark::kMillisecond);

static void BM_OraclePpt(benchmark::State& state) {
  const PhiParams p{0.3, 0.1, 1.5, Dims(3, 3)};
  const std::size_t samples = std::size_t(state.range(1));
  for (auto _ : state) {
    OracleVerdict v = oracle_ppt_inducing(p, samples, 1, exec_of(state));
    benchmark::DoNotOptimize(v.worst);
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(samples));
}
BENCHMARK(BM_OraclePpt)->ArgNames({"parallel", "samples"})->ArgsProduct({{0, 1}, {500}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
