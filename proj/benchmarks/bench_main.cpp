#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "metchar/clustering.hpp"
#include "metchar/dataset.hpp"
#include "metchar/optimizer.hpp"
#include "metchar/rng.hpp"

using namespace metchar;

namespace {

BinaryGlyph random_glyph(std::mt19937_64& rng, int size) {
  BinaryGlyph g;
  g.size = size;
  g.label = "b";
  g.bits.resize(static_cast<std::size_t>(size) * size);
  for (auto& b : g.bits) b = bounded(rng, 3) == 0 ? 1 : 0;
  return g;
}

std::vector<FeatureSet> random_features(int n, int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FeatureSet> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(extract_features(random_glyph(rng, size)));
  return out;
}

void ExtractFeatures(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto g = random_glyph(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto fs = extract_features(g);
    benchmark::DoNotOptimize(fs);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(ExtractFeatures)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BuildTensor(benchmark::State& state) {
  const auto features = random_features(static_cast<int>(state.range(0)), 64, 2);
  const auto reg = default_registry();
  for (auto _ : state) {
    auto tensor = build_tensor(reg, features);
    benchmark::DoNotOptimize(tensor);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildTensor)->RangeMultiplier(2)->Range(32, 256)->Complexity();

void KMeansAssign(benchmark::State& state) {
  const auto features = random_features(static_cast<int>(state.range(0)), 64, 3);
  WeightedMetric m{default_registry(), {}};
  m.weights.assign(m.components.size(), 1.0);
  for (auto _ : state) {
    auto res = kmeans(features, 10, m, 7, 20);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(KMeansAssign)->Arg(100)->Arg(300);

void TrainRound(benchmark::State& state) {
  const int n = 200;
  const auto features = random_features(n, 64, 4);
  std::mt19937_64 rng(5);
  std::vector<int> labels(n);
  for (auto& l : labels) l = static_cast<int>(bounded(rng, 10));
  const auto reg = default_registry();
  const DistanceTensor tensor = build_tensor(reg, features);
  MetCharConfig cfg;
  cfg.iterations = static_cast<int>(state.range(0));
  cfg.k = 10;
  cfg.seed = 11;
  for (auto _ : state) {
    auto tm = train_metric(features, labels, reg, tensor, cfg);
    benchmark::DoNotOptimize(tm);
  }
}
BENCHMARK(TrainRound)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
