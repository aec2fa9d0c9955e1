#include <benchmark/benchmark.h>

#include <functional>

#include "cylindex/numeric_spectra.hpp"
#include "cylindex/tridiagonal.hpp"

using namespace cylindex;

namespace {

SymTridiagonal case_two_matrix() {
  const PerturbationParams p{0, 0.0, 1.0, 0.0, 1.0};
  const ModeCoefficient c = mode_coefficient(p, make_profiles(0), 0);
  return schrodinger_matrix(std::cref(c), Discretization::around(0), SchrodingerKind::StarL_L);
}

void BM_LowestEigenvalues(benchmark::State& state) {
  const SymTridiagonal t = case_two_matrix();
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues(t, k));
}

void BM_LowestEigenvaluesSerial(benchmark::State& state) {
  const SymTridiagonal t = case_two_matrix();
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues_serial(t, k));
}

const PerturbationParams kSweep{1, 2.0, 1.0, 1.0, 1.0};

void BM_KernelSweep(benchmark::State& state) {
  const ProfilePair profiles = make_profiles(kSweep.m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        numeric_kernel_sweep(kSweep, profiles, {-5, 7}, Discretization::around(kSweep.m), {}, 3));
  }
}

void BM_KernelSweepSerial(benchmark::State& state) {
  const ProfilePair profiles = make_profiles(kSweep.m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_kernel_sweep_serial(kSweep, profiles, {-5, 7},
                                                         Discretization::around(kSweep.m), {}, 3));
  }
}

}  // namespace

BENCHMARK(BM_LowestEigenvalues)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowestEigenvaluesSerial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSweep)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSweepSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
