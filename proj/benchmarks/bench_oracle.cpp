#include <benchmark/benchmark.h>

#include "orbiquant/model_spectra.hpp"
#include "orbiquant/oracle.hpp"
#include "orbiquant/orbifold.hpp"

namespace {

void BM_GroupLawFuzz(benchmark::State& state) {
  const auto base = orbiquant::OrbifoldSurface::sphere({3, 5, 7});
  const int shards = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbiquant::group_law_fuzz(base, 2000, 42, shards));
}
BENCHMARK(BM_GroupLawFuzz)->Arg(1)->Arg(4)->UseRealTime();

void BM_OscillatorOverlap(benchmark::State& state) {
  const auto a = orbiquant::cone_oscillator_wavefunction(3, 1, 3, {});
  const auto b = orbiquant::cone_oscillator_wavefunction(3, 2, 3, {});
  for (auto _ : state) benchmark::DoNotOptimize(orbiquant::orthonormality_check(a, b));
}
BENCHMARK(BM_OscillatorOverlap);

void BM_BruteSnm(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbiquant::brute_degeneracy_snm(2, 3, 1, state.range(0)));
  }
}
BENCHMARK(BM_BruteSnm)->Arg(20)->Arg(80);

}  // namespace
