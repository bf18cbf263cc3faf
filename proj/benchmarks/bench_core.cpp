#include <benchmark/benchmark.h>

#include "dunkl/lauricella.hpp"
#include "dunkl/strata.hpp"

using namespace dunkl;
namespace lau = dunkl::lauricella;

static void BM_Lattice(benchmark::State& state) {
  const auto arr = catalog::lauricella_arrangement(std::vector<double>(static_cast<size_t>(state.range(0)), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(arr));
}
BENCHMARK(BM_Lattice)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_Flatness(benchmark::State& state) {
  const DunklSystem sys(catalog::lauricella_arrangement(std::vector<double>(static_cast<size_t>(state.range(0)), 0.3)));
  for (auto _ : state) benchmark::DoNotOptimize(flatness_check(sys));
}
BENCHMARK(BM_Flatness)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_Periods(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const auto ws = lau::build_weights(std::vector<double>(static_cast<size_t>(points), 0.3));
  std::vector<cplx> z;
  for (int i = 0; i < points; ++i) z.emplace_back(i, 0.0);
  const lau::Configuration c(z);
  for (auto _ : state) benchmark::DoNotOptimize(lau::period(ws, c));
}
BENCHMARK(BM_Periods)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

static void BM_Monodromy(benchmark::State& state) {
  const auto ws = lau::build_weights({0.3, 0.45, 0.5, 0.35});
  const lau::Configuration base({0.0, 1.0, 2.0, 3.0});
  for (auto _ : state) benchmark::DoNotOptimize(lau::monodromy(ws, base, {{2, 1, 0.0}}));
}
BENCHMARK(BM_Monodromy)->Unit(benchmark::kMillisecond);

static void BM_StrataReport(benchmark::State& state) {
  const std::vector<double> mu(6, 0.3);
  const DunklSystem sys(catalog::lauricella_arrangement(mu));
  for (auto _ : state) {
    const auto plan = strata::completion_plan(sys, lau::GeometryType::Hyperbolic);
    const auto orders = strata::lauricella_symmetry_orders(mu, sys);
    benchmark::DoNotOptimize(strata::strata_report(sys, plan, &orders));
  }
}
BENCHMARK(BM_StrataReport)->Unit(benchmark::kMillisecond);

static void BM_NormIntegral(benchmark::State& state) {
  const auto ws = lau::build_weights({0.3, 0.6, 0.5});
  const lau::Configuration c({0.0, 1.2, 2.6});
  for (auto _ : state) benchmark::DoNotOptimize(lau::norm_integral(ws, c));
}
BENCHMARK(BM_NormIntegral)->Unit(benchmark::kSecond)->Iterations(1);

BENCHMARK_MAIN();
