#include <benchmark/benchmark.h>

#include <string>

#include "tauhh/bimodule.hpp"
#include "tauhh/hochschild.hpp"
#include "tauhh/presentation_io.hpp"
#include "tauhh/resolution.hpp"
#include "tauhh/tau.hpp"

namespace {

tauhh::FDAlgebra load(const std::string& name) {
  return tauhh::build_algebra(
      tauhh::load_presentation(std::string(TAUHH_BENCH_DATA) + "/" + name).presentation);
}

void BM_HochschildLambdaQ(benchmark::State& state) {
  tauhh::FDAlgebra a = load("lambda_q2.quiver");
  tauhh::Bimodule x = tauhh::regular_bimodule(a);
  for (auto _ : state) benchmark::DoNotOptimize(tauhh::hh_dims(a, x, state.range(0)));
}

void BM_TauLambdaQ(benchmark::State& state) {
  tauhh::FDAlgebra a = load("lambda_q2.quiver");
  tauhh::Bimodule x = tauhh::regular_bimodule(a);
  for (auto _ : state) benchmark::DoNotOptimize(tauhh::compute_tau(a, x, state.range(0)));
}

void BM_ExtTable(benchmark::State& state, const char* file) {
  tauhh::FDAlgebra a = load(file);
  for (auto _ : state) benchmark::DoNotOptimize(tauhh::ext_tor_table(a, state.range(0)));
}

BENCHMARK(BM_HochschildLambdaQ)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TauLambdaQ)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExtTable, tau_not_derived, "tau_not_derived.quiver")->Arg(8);
BENCHMARK_CAPTURE(BM_ExtTable, aba, "aba.quiver")->Arg(8);

}  // namespace

BENCHMARK_MAIN();
