#include <benchmark/benchmark.h>

#include "rindler_ferm/density.hpp"
#include "rindler_ferm/entanglement.hpp"
#include "rindler_ferm/rindler.hpp"

using namespace rindler_ferm;

namespace {

const SqueezeParam kR(0.5);

void BM_BuildVacuumDirac(benchmark::State& state) {
  const auto field = FieldKind::dirac(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_vacuum(field, kR));
}
BENCHMARK(BM_BuildVacuumDirac)->DenseRange(1, 6);

void BM_TraceOutRegionIV(benchmark::State& state) {
  const auto field = FieldKind::dirac(static_cast<int>(state.range(0)));
  const auto scenario = Scenario::vac_one_dirac();
  const StateVector joint = build_joint_state(scenario, field, kR);
  for (auto _ : state) benchmark::DoNotOptimize(trace_out_region_iv(joint, field));
}
BENCHMARK(BM_TraceOutRegionIV)->DenseRange(1, 4);

void BM_AnalyticDensity(benchmark::State& state) {
  const auto field = FieldKind::dirac(static_cast<int>(state.range(0)));
  const auto scenario = Scenario::bell_dirac();
  for (auto _ : state) benchmark::DoNotOptimize(analytic_density(scenario, field, kR));
}
BENCHMARK(BM_AnalyticDensity)->DenseRange(1, 5);

void BM_NegativityBruteforce(benchmark::State& state) {
  const auto field = FieldKind::spinless(static_cast<int>(state.range(0)));
  const auto rho = analytic_density(Scenario::vac_one_spinless(), field, kR);
  for (auto _ : state) benchmark::DoNotOptimize(negativity_bruteforce(rho));
}
BENCHMARK(BM_NegativityBruteforce)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_NegativityBlocks(benchmark::State& state) {
  const auto field = FieldKind::dirac(static_cast<int>(state.range(0)));
  const auto scenario = Scenario::vac_one_dirac();
  for (auto _ : state) benchmark::DoNotOptimize(negativity_blocks(scenario, field, kR));
}
BENCHMARK(BM_NegativityBlocks)->RangeMultiplier(2)->Range(1, 64);

}  // namespace

BENCHMARK_MAIN();
