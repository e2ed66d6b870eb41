#include <doctest.h>

#include <random>

#include "metchar/clustering.hpp"
#include "metchar/dataset.hpp"
#include "metchar/optimizer.hpp"
#include "metchar/rng.hpp"
#include "support/oracles.hpp"

using namespace metchar;

namespace {

std::vector<FeatureSet> random_dataset(std::mt19937_64& rng, int n, int s) {
  std::vector<FeatureSet> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(extract_features(metchar::testing::random_glyph(rng, s)));
  return out;
}

WeightedMetric random_metric(std::mt19937_64& rng) {
  WeightedMetric m{default_registry(), {}};
  m.weights.resize(m.components.size());
  for (auto& w : m.weights) w = unit_double(rng);
  return m;
}

std::vector<FeatureSet> two_class_features(std::vector<int>* labels_out = nullptr) {
  SynthSpec spec;
  spec.class_count = 2;
  spec.samples_per_class = 5;
  spec.grid_size = 24;
  spec.jitter = 1;
  spec.seed = 7;
  spec.class_strokes = {
      {Stroke{Stroke::Orientation::vertical, 2, 6, 8}},
      {Stroke{Stroke::Orientation::vertical, 13, 16, 8}},
  };
  const auto glyphs = generate_synthetic(spec);
  std::vector<FeatureSet> features;
  for (const auto& g : glyphs) features.push_back(extract_features(g));
  if (labels_out) *labels_out = label_ids(glyphs).first;
  return features;
}

}  // namespace

TEST_SUITE("clustering") {

TEST_CASE("k=1 puts everything in cluster 0 and converges fast") {
  std::mt19937_64 rng(5);
  const auto features = random_dataset(rng, 6, 5);
  const auto res = kmeans(features, 1, random_metric(rng), 42);
  for (const int a : res.assignments) CHECK(a == 0);
  CHECK(res.converged);
  CHECK(res.iterations <= 2);
}

TEST_CASE("preconditions are enforced") {
  std::mt19937_64 rng(6);
  const auto features = random_dataset(rng, 3, 4);
  CHECK_THROWS_AS(kmeans(features, 0, random_metric(rng), 1), std::invalid_argument);
  CHECK_THROWS_AS(kmeans(features, 4, random_metric(rng), 1), std::invalid_argument);
}

TEST_CASE("all-zero weights degenerate deterministically") {
  std::mt19937_64 rng(8);
  const auto features = random_dataset(rng, 3, 4);
  WeightedMetric zero{default_registry(), std::vector<double>(10, 0.0)};
  const auto res = kmeans(features, 2, zero, 9);
  // every distance ties at 0: the assignment step sends all samples to
  // cluster 0, then repair hands the lowest-index sample to the empty one
  CHECK(res.assignments == std::vector<int>{1, 0, 0});
  const auto rerun = kmeans(features, 2, zero, 9);
  CHECK(rerun.assignments == res.assignments);
}

TEST_CASE("separable two-class dataset clusters perfectly") {
  std::vector<int> labels;
  const auto features = two_class_features(&labels);
  WeightedMetric m{{parse_component("hbv_md")}, {1.0}};
  const auto res = kmeans(features, 2, m, 3);
  const auto cc = score_pairs(labels, res.assignments);
  CHECK(cc.accuracy() == 1.0);
  CHECK(cc.fp == 0);
  CHECK(cc.fn == 0);
}

TEST_CASE("identical seeds give identical results") {
  std::mt19937_64 rng(10);
  const auto features = random_dataset(rng, 12, 5);
  const auto m = random_metric(rng);
  const auto a = kmeans(features, 3, m, 1234);
  const auto b = kmeans(features, 3, m, 1234);
  CHECK(a.assignments == b.assignments);
  CHECK(a.iterations == b.iterations);
  CHECK(a.converged == b.converged);
}

TEST_CASE("positive weight scaling leaves the labeling untouched") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const int n = 6 + static_cast<int>(bounded(rng, 10));
    const auto features = random_dataset(rng, n, 5);
    const auto m = random_metric(rng);
    const int k = 2 + static_cast<int>(bounded(rng, 3));
    const auto base = kmeans(features, k, m, 77);
    for (const double c : {0.01, 137.5}) {
      WeightedMetric scaled = m;
      for (auto& w : scaled.weights) w *= c;
      const auto res = kmeans(features, k, scaled, 77);
      CHECK(res.assignments == base.assignments);
      CHECK(res.iterations == base.iterations);
    }
  }
}

TEST_CASE("reassignment never worsens the objective under fixed centroids") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 10; ++round) {
    const auto features = random_dataset(rng, 15, 5);
    const auto m = random_metric(rng);
    const auto res = kmeans(features, 3, m, round);
    REQUIRE(res.objective_prev_assignment.size() == res.objective_new_assignment.size());
    for (std::size_t i = 0; i < res.objective_new_assignment.size(); ++i)
      CHECK(res.objective_new_assignment[i] <=
            res.objective_prev_assignment[i] * (1.0 + 1e-12) + 1e-12);
  }
}

}  // TEST_SUITE
