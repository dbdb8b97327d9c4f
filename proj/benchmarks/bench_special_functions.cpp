#include <benchmark/benchmark.h>

#include "orbiquant/special_functions.hpp"

namespace {

void BM_BesselJ(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    x += 0.37;
    if (x > 60.0) x = 0.0;
    benchmark::DoNotOptimize(orbiquant::bessel_j(order, x));
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(3)->Arg(20);

void BM_Jacobi(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbiquant::jacobi(degree, 2.0, 3.0, 0.3));
}
BENCHMARK(BM_Jacobi)->Arg(4)->Arg(32);

void BM_GaussLegendre(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbiquant::gauss_legendre(order));
}
BENCHMARK(BM_GaussLegendre)->Arg(50)->Arg(200);

}  // namespace
