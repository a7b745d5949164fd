#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "kolkata/kolkata.hpp"

namespace {

constexpr std::uint64_t kSeed = 20170818;

kolkata::LorenzCurve sample_curve(std::size_t n) {
  std::mt19937_64 rng(kSeed);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> incomes(n);
  for (auto& x : incomes) x = draw(rng);
  return kolkata::lorenz_from_sample(kolkata::IncomeSample(std::move(incomes)));
}

void BM_LorenzFromSample(benchmark::State& state) {
  std::mt19937_64 rng(kSeed);
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> incomes(static_cast<std::size_t>(state.range(0)));
  for (auto& x : incomes) x = draw(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kolkata::lorenz_from_sample(kolkata::IncomeSample(incomes)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LorenzFromSample)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_KIndexPiecewise(benchmark::State& state) {
  const auto curve = sample_curve(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kolkata::k_index(curve));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KIndexPiecewise)->RangeMultiplier(10)->Range(100, 100000)->Complexity();

void BM_IndexReportPiecewise(benchmark::State& state) {
  const auto curve = sample_curve(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kolkata::index_report(curve));
}
BENCHMARK(BM_IndexReportPiecewise)->RangeMultiplier(10)->Range(100, 100000);

void BM_KIndexAnalytic(benchmark::State& state) {
  const kolkata::LorenzCurve curve = kolkata::Exponential{1.0};
  for (auto _ : state) benchmark::DoNotOptimize(kolkata::k_index(curve));
}
BENCHMARK(BM_KIndexAnalytic);

void BM_GiniAnalytic(benchmark::State& state) {
  const auto curve = kolkata::preset(state.range(0) == 0 ? "exp1" : "lf10");
  for (auto _ : state) benchmark::DoNotOptimize(kolkata::gini(curve));
}
BENCHMARK(BM_GiniAnalytic)->Arg(0)->Arg(1);

void BM_PietraAnalytic(benchmark::State& state) {
  const kolkata::LorenzCurve curve = kolkata::CircularQuadrant{};
  for (auto _ : state) benchmark::DoNotOptimize(kolkata::pietra(curve));
}
BENCHMARK(BM_PietraAnalytic);

void BM_OrderingSuite(benchmark::State& state) {
  kolkata::VerifyOptions options;
  options.suites = {kolkata::Suite::ordering};
  options.random_curves = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(kolkata::run_verification(options));
}
BENCHMARK(BM_OrderingSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
