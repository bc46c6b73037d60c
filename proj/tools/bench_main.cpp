// Compares the OpenMP kernels against their serial reference twins on
// fixed seeded workloads.

#include <benchmark/benchmark.h>

#include "metareason/generator.hpp"
#include "metareason/oracles.hpp"
#include "metareason/pp_solver.hpp"

namespace {

using namespace metareason;

PerformanceProfilesInstance enum_workload() {
  gen::GeneratorConfig config;
  config.kind = DocumentKind::PerformanceProfiles;
  config.seed = 11;
  config.size = 6;
  config.width = 5;
  config.bound = 10;
  return gen::generate(config).as<PerformanceProfilesInstance>();
}

PerformanceProfilesInstance grid_workload() {
  gen::GeneratorConfig config;
  config.kind = DocumentKind::PerformanceProfiles;
  config.seed = 3;
  config.size = 4;
  config.width = 4;
  config.bound = 12;
  return gen::generate(config).as<PerformanceProfilesInstance>();
}

KnapsackInstance knapsack_workload() {
  gen::SplitMix64 rng(5);
  std::vector<KnapsackItem> items;
  std::int64_t total_cost = 0, total_value = 0;
  for (int i = 0; i < 22; ++i) {
    items.push_back({rng.range(1, 50), rng.range(1, 50)});
    total_cost += items.back().cost;
    total_value += items.back().value;
  }
  // Unreachable target, so both scans must visit every subset.
  return KnapsackInstance(std::move(items), total_cost / 2, total_value + 1);
}

std::vector<InstanceDocument> corpus_workload() {
  std::vector<InstanceDocument> corpus;
  gen::GeneratorConfig config;
  config.kind = DocumentKind::Knapsack;
  config.size = 4;
  config.width = 6;
  for (config.seed = 1; config.seed <= 64; ++config.seed)
    corpus.push_back(gen::generate(config));
  return corpus;
}

void BM_ProfileEnumeration(benchmark::State& state) {
  const auto instance = enum_workload();
  for (auto _ : state) benchmark::DoNotOptimize(pp::optimal_allocation(instance));
}
BENCHMARK(BM_ProfileEnumeration);

void BM_ProfileEnumerationSerial(benchmark::State& state) {
  const auto instance = enum_workload();
  for (auto _ : state) benchmark::DoNotOptimize(pp::optimal_allocation_serial(instance));
}
BENCHMARK(BM_ProfileEnumerationSerial);

void BM_GridOracle(benchmark::State& state) {
  const auto instance = grid_workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(pp::grid_oracle(instance, Rational(1, 4)));
}
BENCHMARK(BM_GridOracle);

void BM_GridOracleSerial(benchmark::State& state) {
  const auto instance = grid_workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(pp::grid_oracle_serial(instance, Rational(1, 4)));
}
BENCHMARK(BM_GridOracleSerial);

void BM_KnapsackScan(benchmark::State& state) {
  const auto instance = knapsack_workload();
  for (auto _ : state) benchmark::DoNotOptimize(oracles::solve_knapsack(instance));
}
BENCHMARK(BM_KnapsackScan);

void BM_KnapsackScanSerial(benchmark::State& state) {
  const auto instance = knapsack_workload();
  for (auto _ : state) benchmark::DoNotOptimize(oracles::solve_knapsack_serial(instance));
}
BENCHMARK(BM_KnapsackScanSerial);

void BM_VerifyCorpus(benchmark::State& state) {
  const auto corpus = corpus_workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracles::verify_corpus(oracles::ReductionKind::KnapsackToProfiles, corpus));
}
BENCHMARK(BM_VerifyCorpus);

void BM_VerifyCorpusSerial(benchmark::State& state) {
  const auto corpus = corpus_workload();
  for (auto _ : state)
    benchmark::DoNotOptimize(
        oracles::verify_corpus_serial(oracles::ReductionKind::KnapsackToProfiles, corpus));
}
BENCHMARK(BM_VerifyCorpusSerial);

}  // namespace

BENCHMARK_MAIN();
