#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "oodlsp/aggregate.hpp"
#include "oodlsp/andness.hpp"
#include "oodlsp/calibration.hpp"

namespace {

constexpr std::size_t kSamples = 1'000'000;

void BM_AndnessParallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oodlsp::estimate_andness(0.5, k, kSamples, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kSamples));
}

void BM_AndnessSerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oodlsp::reference::estimate_andness(0.5, k, kSamples, 1));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kSamples));
}

std::vector<oodlsp::BlockObservation> observations(std::size_t arity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  const auto w = oodlsp::WeightVector::equal(arity);
  std::vector<oodlsp::BlockObservation> out;
  for (int i = 0; i < 10; ++i) {
    oodlsp::BlockObservation o{"o" + std::to_string(i), {}, oodlsp::Preference(0.0)};
    for (std::size_t j = 0; j < arity; ++j) o.inputs.emplace_back(unit(rng));
    o.target = oodlsp::aggregate(o.inputs, w, oodlsp::GcdSymbol::CMinusMinus);
    out.push_back(std::move(o));
  }
  return out;
}

void BM_FitParallel(benchmark::State& state) {
  const auto obs = observations(static_cast<std::size_t>(state.range(0)));
  const std::vector<oodlsp::GcdSymbol> ops(oodlsp::kAllGcdSymbols.begin(), oodlsp::kAllGcdSymbols.end());
  for (auto _ : state) benchmark::DoNotOptimize(oodlsp::fit_block(obs, ops, 0.01).residual);
}

void BM_FitSerial(benchmark::State& state) {
  const auto obs = observations(static_cast<std::size_t>(state.range(0)));
  const std::vector<oodlsp::GcdSymbol> ops(oodlsp::kAllGcdSymbols.begin(), oodlsp::kAllGcdSymbols.end());
  for (auto _ : state) benchmark::DoNotOptimize(oodlsp::reference::fit_block(obs, ops, 0.01).residual);
}

}  // namespace

BENCHMARK(BM_AndnessParallel)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AndnessSerial)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FitParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FitSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
