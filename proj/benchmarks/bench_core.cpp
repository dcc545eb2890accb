#include <benchmark/benchmark.h>

#include "spacs/experiments.hpp"
#include "spacs/matrix_exp.hpp"
#include "spacs/measurement.hpp"
#include "spacs/operators.hpp"

namespace {

void BM_DisplacementMatrix(benchmark::State& state) {
  const spacs::FockDim dim(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spacs::displacement_matrix(spacs::Complex(0.5, 0.2), dim));
}
BENCHMARK(BM_DisplacementMatrix)->Arg(64)->Arg(256)->Arg(1024);

void BM_JointUnitary(benchmark::State& state) {
  const spacs::FockDim dim(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spacs::joint_unitary(1.0, dim));
}
BENCHMARK(BM_JointUnitary)->Arg(40)->Arg(120);

void BM_Fig2aSweep(benchmark::State& state) {
  const auto spec = spacs::figure_preset(spacs::FigureId::fig2a);
  for (auto _ : state) benchmark::DoNotOptimize(spacs::run_sweep(spec, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Fig2aSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
