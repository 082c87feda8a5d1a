#include <benchmark/benchmark.h>

#include "superforms/cone.hpp"

namespace {

using namespace superforms;

const std::vector<std::string> kModels = {"torus4", "su2", "h3", "h5", "su2xr", "h3xr"};

void BM_StructureOperators(benchmark::State& state) {
  Model m = builtin_model(kModels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(structure_operators(m));
  state.SetLabel(m.name());
}
BENCHMARK(BM_StructureOperators)->DenseRange(0, 5);

void BM_SasakianOperators(benchmark::State& state) {
  Model m = builtin_model(kModels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sasakian_operators(m));
  state.SetLabel(m.name());
}
BENCHMARK(BM_SasakianOperators)->Arg(1)->Arg(2)->Arg(3);

void BM_SasakianRelationReport(benchmark::State& state) {
  Model m = builtin_model(kModels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(sasakian_relation_report(m));
  state.SetLabel(m.name());
}
BENCHMARK(BM_SasakianRelationReport)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_JacobiPool(benchmark::State& state) {
  Model m = builtin_model(kModels[state.range(0)]);
  std::vector<GradedOperator> pool = sasakian_operators(m).generators();
  for (auto _ : state) benchmark::DoNotOptimize(super_jacobi_pool(pool, m.name()));
  state.SetLabel(m.name());
}
BENCHMARK(BM_JacobiPool)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_FullCohomology(benchmark::State& state) {
  Model m = builtin_model(kModels[state.range(0)]);
  CochainComplex cx = full_complex(m);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(cx));
  state.SetLabel(m.name());
}
BENCHMARK(BM_FullCohomology)->DenseRange(0, 5);

void BM_ConeIdentification(benchmark::State& state) {
  Model m = builtin_model(kModels[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cone_identification(m));
  state.SetLabel(m.name());
}
BENCHMARK(BM_ConeIdentification)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar::frac(static_cast<long>((r * 7 + c * 3) % 11) - 5, 1 + (r + c) % 4);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
