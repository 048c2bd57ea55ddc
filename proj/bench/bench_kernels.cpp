// Serial reference vs OpenMP kernels on the workloads certification,
// profiling and the falsifier run.

#include <benchmark/benchmark.h>

#include "mextremal/kernels.hpp"
#include "mextremal/maps.hpp"
#include "mextremal/pick.hpp"

namespace mx = mextremal;
namespace k = mextremal::kernels;

namespace {

void BM_SampleBoundarySerial(benchmark::State& state) {
  const mx::DomainModel dom = mx::propab_domain();
  for (auto _ : state) benchmark::DoNotOptimize(k::sample_boundary_serial(dom, state.range(0), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SampleBoundaryOmp(benchmark::State& state) {
  const mx::DomainModel dom = mx::propab_domain();
  for (auto _ : state) benchmark::DoNotOptimize(k::sample_boundary_omp(dom, state.range(0), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

const k::ScalarField kPropabInverse = [](std::span<const mx::cplx> z) { return 4.0 * z[0] * z[1] + z[2]; };

void BM_SupAbsSerial(benchmark::State& state) {
  const auto pts = k::sample_boundary_serial(mx::propab_domain(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(k::sup_abs_serial(kPropabInverse, pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SupAbsOmp(benchmark::State& state) {
  const auto pts = k::sample_boundary_serial(mx::propab_domain(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(k::sup_abs_omp(kPropabInverse, pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MaxDefectSerial(benchmark::State& state) {
  const mx::TaggedMap f = mx::family_prop40(5, 0.5);
  const auto lams = k::disc_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k::max_defect_serial(f.map, f.domain, lams));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(lams.size()));
}

void BM_MaxDefectOmp(benchmark::State& state) {
  const mx::TaggedMap f = mx::family_prop40(5, 0.5);
  const auto lams = k::disc_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(k::max_defect_omp(f.map, f.domain, lams));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(lams.size()));
}

void BM_Falsifier(benchmark::State& state) {
  const mx::MapSpec f = mx::MapSpec::tuple({mx::monomial_map(0.5, 1), mx::MapSpec::constant(0.0)});
  mx::FalsifierOptions opt;
  opt.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(mx::falsify_weak_extremality(f, mx::ball(2), {0.0, 0.4, -0.4}, opt));
}

}  // namespace

BENCHMARK(BM_SampleBoundarySerial)->Arg(1 << 14)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleBoundaryOmp)->Arg(1 << 14)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SupAbsSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SupAbsOmp)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MaxDefectSerial)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxDefectOmp)->Arg(4096)->Arg(65536)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Falsifier)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
