#include <benchmark/benchmark.h>

#include <nlohmann/json.hpp>

#include "ferrer/diagram.hpp"
#include "ferrer/ideal.hpp"
#include "ferrer/invariants.hpp"
#include "ferrer/macaulay.hpp"
#include "ferrer/oracle.hpp"
#include "ferrer/series.hpp"

namespace {

using namespace ferrer;

const Partition& example_4322() {
  static const Partition p = Partition::from_json(nlohmann::json::parse("[[4,3,2,2],[3,2,1],[2],[2]]"));
  return p;
}

const Partition& example_54432() {
  static const Partition p = Partition::from_json(
      nlohmann::json::parse("[[5,4,4,3,2],[4,4,3,3,1],[4,4,3,1],[2,1,1],[2,1]]"));
  return p;
}

void BM_BettiFormula(benchmark::State& state) {
  const Partition& p = state.range(0) == 0 ? example_4322() : example_54432();
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(p));
}
BENCHMARK(BM_BettiFormula)->Arg(0)->Arg(1);

void BM_BettiOracle(benchmark::State& state) {
  const Partition& p = state.range(0) == 0 ? example_4322() : example_54432();
  const MonomialIdeal ideal = ferrer_ideal(p);
  OracleOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti_brute(ideal, options));
}
BENCHMARK(BM_BettiOracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BettiFullDiagram(benchmark::State& state) {
  const Partition p = full_diagram(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(p));
}
BENCHMARK(BM_BettiFullDiagram)->RangeMultiplier(2)->Range(2, 16);

void BM_SeriesLinear(benchmark::State& state) {
  const Partition& p = example_54432();
  const DiagonalProfile prof = diagonal_profile(p);
  const std::vector<std::int64_t> sigma(prof.counts.begin() + prof.full, prof.counts.end());
  const int d = ambient_size(p) - prof.full;
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series_linear(prof.full, p.depth(), sigma, d));
}
BENCHMARK(BM_SeriesLinear);

void BM_SeriesMonomial(benchmark::State& state) {
  const MonomialIdeal ideal = ferrer_ideal(state.range(0) == 0 ? example_4322() : example_54432());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series_monomial(ideal));
}
BENCHMARK(BM_SeriesMonomial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MinimalPrimes(benchmark::State& state) {
  const MonomialIdeal ideal = ferrer_ideal(state.range(0) == 0 ? example_4322() : example_54432());
  for (auto _ : state) benchmark::DoNotOptimize(minimal_primes(ideal));
}
BENCHMARK(BM_MinimalPrimes)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_RealizeMVector(benchmark::State& state) {
  const std::vector<std::int64_t> h{1, 4, 3, 4, 1};
  for (auto _ : state) benchmark::DoNotOptimize(realize_mvector(h));
}
BENCHMARK(BM_RealizeMVector)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
