#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include <halfspace/boundary_integrals.hpp>
#include <halfspace/covering.hpp>
#include <halfspace/kernels.hpp>
#include <halfspace/measure.hpp>

namespace {

using namespace halfspace;

Vector random_point(std::mt19937_64& rng, double spread) {
  std::uniform_real_distribution<double> u(-spread, spread);
  return {u(rng), u(rng), std::abs(u(rng)) + 2.0};
}

DiscreteMeasure random_measure(std::size_t atoms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Atom> a;
  for (std::size_t i = 0; i < atoms; ++i) a.push_back({random_point(rng, 50.0), 1.0 / static_cast<double>(atoms)});
  return DiscreteMeasure(3, MeasureDomain::kHalfSpace, std::move(a));
}

void BM_GreenKernel(benchmark::State& state) {
  const Vector x{0.3, -1.2, 0.7}, y{2.0, 0.5, 1.9};
  for (auto _ : state) benchmark::DoNotOptimize(green(x, y));
}
BENCHMARK(BM_GreenKernel);

void BM_PoissonKernel(benchmark::State& state) {
  const Vector x{0.3, -1.2, 0.7}, yp{2.0, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(poisson_kernel(x, yp));
}
BENCHMARK(BM_PoissonKernel);

void BM_PoissonIntegral(benchmark::State& state) {
  const auto f = state.range(0) == 0 ? BoundaryData::compact_bump(3, 1.0, 1.0) : BoundaryData::gaussian(3, 1.0, 1.0);
  const HalfSpacePoint x(Vector{0.4, 0.2, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(poisson_integral(f, x).value);
}
BENCHMARK(BM_PoissonIntegral)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_PoissonIntegralFar(benchmark::State& state) {
  const auto f = BoundaryData::radial_power(3, -3.0);
  const HalfSpacePoint x(Vector{0.0, 0.0, std::ldexp(1.0, static_cast<int>(state.range(0)))});
  for (auto _ : state) benchmark::DoNotOptimize(poisson_integral(f, x).value);
}
BENCHMARK(BM_PoissonIntegralFar)->DenseRange(2, 12, 5)->Unit(benchmark::kMicrosecond);

void BM_MaximalFunction(benchmark::State& state) {
  const auto nu = random_measure(static_cast<std::size_t>(state.range(0)), 1);
  const Vector x{1.0, 2.0, 3.0};
  for (auto _ : state) benchmark::DoNotOptimize(maximal_function(nu, x, 2.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximalFunction)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_VitaliCover(benchmark::State& state) {
  const auto nu = random_measure(32, 2);
  std::mt19937_64 rng(3);
  std::vector<Vector> candidates;
  for (int i = 0; i < state.range(0); ++i) candidates.push_back(random_point(rng, 60.0));
  const double beta = 1.0;
  const double lambda = std::pow(5.0, beta) * nu.total_mass();
  for (auto _ : state) benchmark::DoNotOptimize(vitali_cover(nu, beta, lambda, candidates).budget);
}
BENCHMARK(BM_VitaliCover)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
