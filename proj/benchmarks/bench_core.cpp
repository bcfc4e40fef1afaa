#include <benchmark/benchmark.h>

#include "lcklab/cr.hpp"
#include "lcklab/foliations.hpp"
#include "lcklab/runner.hpp"
#include "lcklab/sampling.hpp"

using namespace lcklab;

namespace {

CVec hopf_point(const HopfModel& hm) {
  Rng rng(1);
  return sample_hopf_point(hm, rng);
}

void BM_ChristoffelAnalytic(benchmark::State& state) {
  const HopfModel hm{static_cast<int>(state.range(0)), 1};
  const MetricChart c = hopf_chart(hm);
  const CVec z = hopf_point(hm);
  for (auto _ : state) benchmark::DoNotOptimize(christoffel(c, z, ChristoffelPath::Preferred));
}
BENCHMARK(BM_ChristoffelAnalytic)->Arg(2)->Arg(4)->Arg(8);

void BM_ChristoffelFiniteDifference(benchmark::State& state) {
  const HopfModel hm{static_cast<int>(state.range(0)), 1};
  const MetricChart c = hopf_chart(hm);
  const CVec z = hopf_point(hm);
  for (auto _ : state) benchmark::DoNotOptimize(christoffel(c, z, ChristoffelPath::FiniteDifference));
}
BENCHMARK(BM_ChristoffelFiniteDifference)->Arg(2)->Arg(4)->Arg(8);

void BM_LeeData(benchmark::State& state) {
  const HopfModel hm{3, 1};
  const LCKStructure lck = hopf_lck(hm);
  const CVec z = hopf_point(hm);
  for (auto _ : state) benchmark::DoNotOptimize(lee_data(lck, z));
}
BENCHMARK(BM_LeeData);

void BM_FirstFoliationFibre(benchmark::State& state) {
  const HopfModel hm{static_cast<int>(state.range(0)), 1};
  const LCKStructure lck = hopf_lck(hm);
  const CVec z = hopf_point(hm);
  for (auto _ : state) benchmark::DoNotOptimize(first_foliation_fibre(lck, z));
}
BENCHMARK(BM_FirstFoliationFibre)->Arg(2)->Arg(4);

void BM_IntegrabilityResidual(benchmark::State& state) {
  const HopfModel hm{3, 1};
  const LCKStructure lck = hopf_lck(hm);
  const CVec z = hopf_point(hm);
  for (auto _ : state) benchmark::DoNotOptimize(integrability_residual(lck, z));
}
BENCHMARK(BM_IntegrabilityResidual);

void BM_LeviMatrix(benchmark::State& state) {
  const HopfModel hm{static_cast<int>(state.range(0)), 1};
  const LCKStructure lck = hopf_lck(hm);
  const CVec z = hopf_point(hm);
  for (auto _ : state) benchmark::DoNotOptimize(levi_matrix(lck, z));
}
BENCHMARK(BM_LeviMatrix)->Arg(2)->Arg(3);

void BM_RunAllHopf(benchmark::State& state) {
  RunConfig cfg;
  cfg.points = 10;
  cfg.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg));
}
BENCHMARK(BM_RunAllHopf)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
