#include <benchmark/benchmark.h>

#include "minstab/oracle.hpp"
#include "minstab/variational.hpp"
#include "random_data.hpp"

using namespace minstab;

namespace {

WEData sample_data(int degree, int cap) {
  testing::Rng rng(17);
  return testing::random_data(rng, 4, degree, cap);
}

void BM_FhClosed(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const WEData d = sample_data(degree, 32);
  const auto phi = TestFunction::two_term(2, 5, 0.7, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(F_h(d, phi, 1.2));
}
BENCHMARK(BM_FhClosed)->Arg(4)->Arg(12)->Arg(32);

void BM_FhQuadrature(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const WEData d = sample_data(degree, 32);
  const auto phi = TestFunction::two_term(2, 5, 0.7, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(F_h_quadrature(d, phi, 1.2));
}
BENCHMARK(BM_FhQuadrature)->Arg(4)->Arg(12)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DestabSearch(benchmark::State& state) {
  testing::Rng rng(23);
  const WEData d = testing::random_conformal_data(rng, 5, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(destab_search(d));
}
BENCHMARK(BM_DestabSearch)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_HolomorphyCheck(benchmark::State& state) {
  testing::Rng rng(29);
  const int cap = static_cast<int>(state.range(0));
  const WEData d = testing::random_isotropic_data(rng, 6, 3, cap, cap);
  for (auto _ : state) benchmark::DoNotOptimize(holomorphy_check(d, cap));
}
BENCHMARK(BM_HolomorphyCheck)->Arg(16)->Arg(64);

void BM_Rayleigh(benchmark::State& state) {
  const R3Rep enneper(CoefficientSeries{1.0}, CoefficientSeries{0.0, 1.0});
  RayleighOptions options;
  options.radial = static_cast<int>(state.range(0));
  options.angular = static_cast<int>(state.range(1));
  options.richardson_check = false;
  for (auto _ : state) benchmark::DoNotOptimize(rayleigh_r3(enneper, 1.05, options));
}
BENCHMARK(BM_Rayleigh)->Args({100, 128})->Args({200, 256})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
