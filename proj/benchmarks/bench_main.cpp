#include <benchmark/benchmark.h>

#include "toric/borisov_hua.hpp"
#include "toric/catalog.hpp"
#include "toric/class_map.hpp"
#include "toric/cohomology.hpp"
#include "toric/frobenius.hpp"
#include "toric/lattice.hpp"

using namespace toric;

namespace {

void BM_CubeHistogram(benchmark::State& state) {
  const ClassLattice lat(del_pezzo_6());
  const auto ell = static_cast<std::uint64_t>(state.range(0));
  const FrobeniusOptions options{100'000'000, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(cube_class_histogram(lat, ell, options));
}
BENCHMARK(BM_CubeHistogram)->Args({4, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_FiberMultiplicity(benchmark::State& state) {
  const ClassLattice lat(del_pezzo_6());
  const auto ell = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(lat, lat.zero_class(), lat.zero_class(), ell));
}
BENCHMARK(BM_FiberMultiplicity)->Arg(8)->Arg(64);

void BM_OracleSetup(benchmark::State& state) {
  const ClassLattice lat(del_pezzo_6());
  for (auto _ : state) benchmark::DoNotOptimize(CohomologyOracle(lat));
}
BENCHMARK(BM_OracleSetup)->Unit(benchmark::kMillisecond);

void BM_OracleTable(benchmark::State& state) {
  const CohomologyOracle oracle{ClassLattice(del_pezzo_6())};
  const TDivisor a{{3, -2, 1, -4, 2, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(oracle.table(a));
}
BENCHMARK(BM_OracleTable);

void BM_ComputeK(benchmark::State& state) {
  const ClassLattice lat(del_pezzo_6());
  for (auto _ : state) benchmark::DoNotOptimize(compute_K(lat));
}
BENCHMARK(BM_ComputeK)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  std::uint64_t x = 88172645463325252ull;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      a(i, j) = static_cast<std::int64_t>(x % 41) - 20;
    }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
