#include <benchmark/benchmark.h>

#include "orbiquant/model_spectra.hpp"

namespace {

void BM_SnmSpectrum(benchmark::State& state) {
  const auto sector = orbiquant::kk_charge(1, 2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbiquant::snm_spectrum(2, 3, sector, {}, state.range(0)));
  }
}
BENCHMARK(BM_SnmSpectrum)->Arg(10)->Arg(100);

void BM_SnmGroundLevel(benchmark::State& state) {
  std::int64_t q = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbiquant::snm_ground_level(7, 11, q));
    q = (q + 13) % 1000;
  }
}
BENCHMARK(BM_SnmGroundLevel);

void BM_FootballSpectrum(benchmark::State& state) {
  const auto sector = orbiquant::cyclic_weight(1, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbiquant::football_spectrum(5, sector, {}, state.range(0)));
  }
}
BENCHMARK(BM_FootballSpectrum)->Arg(50);

}  // namespace
