// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <string>

#include "optcode/assign.hpp"
#include "optcode/corpus.hpp"
#include "optcode/maxent.hpp"
#include "optcode/randtype.hpp"
#include "optcode/reference.hpp"
#include "optcode/rng.hpp"

using namespace optcode;

namespace {

struct Instance {
  assign::RankedDistribution dist;
  assign::MagnitudeMultiset ms;
};

Instance brute_force_instance() {
  rng::Engine eng(1);
  std::vector<double> p(8), mags(10);
  for (auto& x : p) x = rng::uniform_open_closed(eng);
  for (auto& x : mags) x = 10.0 * rng::uniform_open_closed(eng);
  std::sort(p.begin(), p.end(), std::greater<>());
  return {assign::RankedDistribution::from_weights(p), assign::MagnitudeMultiset(mags)};
}

const std::string& corpus_text() {
  static const std::string text = [] {
    const randtype::RandomTypingParams params(26, 0.18);
    std::string out;
    for (const auto& w : randtype::generate(params, 3, 2'000'000)) {
      out += w;
      out += ' ';
    }
    return out;
  }();
  return text;
}

}  // namespace

static void BM_BruteForce_Parallel(benchmark::State& state) {
  const auto inst = brute_force_instance();
  const auto g = assign::CostFunction::power(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(assign::brute_force_minimum(inst.dist, inst.ms, g));
}
BENCHMARK(BM_BruteForce_Parallel)->Unit(benchmark::kMillisecond);

static void BM_BruteForce_Serial(benchmark::State& state) {
  const auto inst = brute_force_instance();
  const auto g = assign::CostFunction::power(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(reference::brute_force_minimum(inst.dist, inst.ms, g));
}
BENCHMARK(BM_BruteForce_Serial)->Unit(benchmark::kMillisecond);

static void BM_BuildTable_Parallel(benchmark::State& state) {
  const auto& text = corpus_text();
  for (auto _ : state) benchmark::DoNotOptimize(corpus::build_table(text).size());
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_BuildTable_Parallel)->Unit(benchmark::kMillisecond);

static void BM_BuildTable_Serial(benchmark::State& state) {
  const auto& text = corpus_text();
  for (auto _ : state) benchmark::DoNotOptimize(reference::build_table(text, {}).size());
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_BuildTable_Serial)->Unit(benchmark::kMillisecond);

static void BM_Generate_Parallel(benchmark::State& state) {
  const randtype::RandomTypingParams params(26, 0.18);
  for (auto _ : state) benchmark::DoNotOptimize(randtype::generate(params, 9, state.range(0)).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate_Parallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_Generate_Serial(benchmark::State& state) {
  const randtype::RandomTypingParams params(26, 0.18);
  for (auto _ : state) benchmark::DoNotOptimize(reference::generate(params, 9, state.range(0)).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate_Serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_Sample_Parallel(benchmark::State& state) {
  const maxent::RankSampler s(std::make_shared<maxent::ZetaLaw>(maxent::ZetaParams{2.0}));
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(9, state.range(0)).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample_Parallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_Sample_Serial(benchmark::State& state) {
  const maxent::RankSampler s(std::make_shared<maxent::ZetaLaw>(maxent::ZetaParams{2.0}));
  for (auto _ : state) benchmark::DoNotOptimize(reference::sample(s, 9, state.range(0)).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample_Serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

static void BM_PairCounts_MergeSort(benchmark::State& state) {
  rng::Engine eng(4);
  std::vector<double> x(state.range(0)), y(state.range(0));
  for (auto& v : x) v = static_cast<double>(rng::uniform_index(eng, 1000));
  for (auto& v : y) v = static_cast<double>(rng::uniform_index(eng, 20));
  for (auto _ : state) benchmark::DoNotOptimize(assign::pair_counts(x, y));
}
BENCHMARK(BM_PairCounts_MergeSort)->Arg(1 << 10)->Arg(1 << 14);

static void BM_PairCounts_Quadratic(benchmark::State& state) {
  rng::Engine eng(4);
  std::vector<double> x(state.range(0)), y(state.range(0));
  for (auto& v : x) v = static_cast<double>(rng::uniform_index(eng, 1000));
  for (auto& v : y) v = static_cast<double>(rng::uniform_index(eng, 20));
  for (auto _ : state) benchmark::DoNotOptimize(reference::pair_counts(x, y));
}
BENCHMARK(BM_PairCounts_Quadratic)->Arg(1 << 10)->Arg(1 << 14);

BENCHMARK_MAIN();
