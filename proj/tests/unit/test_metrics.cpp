#include <doctest.h>

#include <algorithm>
#include <random>

#include "metchar/metrics.hpp"
#include "metchar/rng.hpp"
#include "support/oracles.hpp"

using namespace metchar;

namespace {

// Feature set with every profile set to the same short vector; handy for
// pinning exact raw distances.
FeatureSet flat_features(std::vector<std::int32_t> v, int size) {
  FeatureSet fs;
  fs.size = size;
  for (auto& vec : fs.vectors) vec = v;
  return fs;
}

FeatureSet random_features(std::mt19937_64& rng, int s) {
  return extract_features(metchar::testing::random_glyph(rng, s));
}

}  // namespace

TEST_SUITE("metrics") {

TEST_CASE("default registry is the stock ten, in order") {
  const auto reg = default_registry();
  const std::vector<std::string> expected = {"hbv_md", "hfv_md", "vfv_md", "vfv_ed", "dfv_md",
                                             "dfv_ed", "hlv_md", "vlv_md", "vlv_ed", "dlv_ed"};
  REQUIRE(reg.size() == expected.size());
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(component_name(reg[i]) == expected[i]);
  CHECK(all_components().size() == 14);
  CHECK_THROWS_AS(parse_component("hbv_xx"), std::invalid_argument);
  CHECK_THROWS_AS(parse_component("zzz_md"), std::invalid_argument);
}

TEST_CASE("identical feature sets have zero distance on every component") {
  std::mt19937_64 rng(1);
  const auto fs = random_features(rng, 6);
  for (const auto& c : all_components()) CHECK(component_distance(c, fs, fs) == 0.0);
}

TEST_CASE("manhattan distance on a pinned hbv pair") {
  auto a = flat_features({9, 9, 9}, 3);
  auto b = flat_features({9, 9, 9}, 3);
  a[FeatureId::hbv] = {1, 3, 1};
  b[FeatureId::hbv] = {0, 3, 2};
  const ComponentId hbv_md = parse_component("hbv_md");
  CHECK(component_distance(hbv_md, a, b) == 2.0);
}

TEST_CASE("euclidean distance closes a 3-4-5 triangle") {
  const auto a = flat_features({0, 0}, 2);
  const auto b = flat_features({3, 4}, 2);
  const ComponentId vfv_ed = parse_component("vfv_ed");
  CHECK(component_distance(vfv_ed, a, b) == 5.0);
}

TEST_CASE("mismatched vector lengths are rejected") {
  const auto a = flat_features({1, 2, 3}, 3);
  const auto b = flat_features({1, 2}, 2);
  CHECK_THROWS_AS(component_distance(parse_component("hbv_md"), a, b), std::invalid_argument);
}

TEST_CASE("combined distance is the weighted sum") {
  auto a = flat_features({0, 0}, 2);
  auto b = flat_features({0, 0}, 2);
  // raw distances: hbv_md -> 3, vfv_ed -> 4
  a[FeatureId::hbv] = {1, 2};
  b[FeatureId::hbv] = {0, 0};
  a[FeatureId::vfv] = {0, 0};
  b[FeatureId::vfv] = {0, 4};

  WeightedMetric zero{{parse_component("hbv_md"), parse_component("vfv_ed")}, {0.0, 0.0}};
  CHECK(combined_distance(zero, a, b) == 0.0);

  WeightedMetric single{{parse_component("hbv_md")}, {1.0}};
  CHECK(combined_distance(single, a, b) ==
        component_distance(parse_component("hbv_md"), a, b));

  WeightedMetric pair{{parse_component("hbv_md"), parse_component("vfv_ed")}, {2.0, 0.5}};
  CHECK(combined_distance(pair, a, b) == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("component distances are symmetric, non-negative, and triangular") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 100; ++round) {
    const auto a = random_features(rng, 5);
    const auto b = random_features(rng, 5);
    const auto c = random_features(rng, 5);
    for (const auto& comp : all_components()) {
      const double ab = component_distance(comp, a, b);
      const double ba = component_distance(comp, b, a);
      const double ac = component_distance(comp, a, c);
      const double cb = component_distance(comp, c, b);
      CHECK(ab == ba);
      CHECK(ab >= 0.0);
      CHECK(ab <= ac + cb + 1e-9);
    }
    // non-negative combinations preserve the triangle inequality
    WeightedMetric m{default_registry(), {}};
    m.weights.resize(m.components.size());
    for (auto& w : m.weights) w = unit_double(rng) * 3.0;
    CHECK(combined_distance(m, a, b) <=
          combined_distance(m, a, c) + combined_distance(m, c, b) + 1e-9);
  }
}

TEST_CASE("doubling the weights doubles the distance exactly") {
  std::mt19937_64 rng(78);
  const auto a = random_features(rng, 6);
  const auto b = random_features(rng, 6);
  WeightedMetric m{default_registry(), {}};
  m.weights.resize(m.components.size());
  for (auto& w : m.weights) w = unit_double(rng);
  WeightedMetric doubled = m;
  for (auto& w : doubled.weights) w *= 2.0;
  CHECK(combined_distance(doubled, a, b) == 2.0 * combined_distance(m, a, b));
}

TEST_CASE("positive scaling preserves the ordering of pairwise distances") {
  std::mt19937_64 rng(79);
  std::vector<FeatureSet> samples;
  for (int i = 0; i < 8; ++i) samples.push_back(random_features(rng, 5));
  WeightedMetric m{default_registry(), {}};
  m.weights.resize(m.components.size());
  for (auto& w : m.weights) w = unit_double(rng);
  WeightedMetric scaled = m;
  for (auto& w : scaled.weights) w *= 137.5;

  auto order_of = [&](const WeightedMetric& metric) {
    std::vector<std::pair<double, std::pair<int, int>>> dist;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        dist.push_back({combined_distance(metric, samples[i], samples[j]), {i, j}});
    std::stable_sort(dist.begin(), dist.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<int, int>> order;
    for (const auto& d : dist) order.push_back(d.second);
    return order;
  };
  CHECK(order_of(m) == order_of(scaled));
}

TEST_CASE("tensor entries match direct pairwise calls") {
  std::mt19937_64 rng(80);
  std::vector<FeatureSet> samples;
  for (int i = 0; i < 3; ++i) samples.push_back(random_features(rng, 5));
  const auto reg = default_registry();
  const DistanceTensor tensor = build_tensor(reg, samples);
  REQUIRE(tensor.component_count() == reg.size());
  REQUIRE(tensor.sample_count() == 3);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(tensor.at(i, j, j) == 0.0);
      for (std::size_t k = 0; k < 3; ++k) {
        CHECK(tensor.at(i, j, k) == tensor.at(i, k, j));
        CHECK(tensor.at(i, j, k) == component_distance(reg[i], samples[j], samples[k]));
      }
    }
  }
}

TEST_CASE("tensor of identical samples is all zero") {
  std::mt19937_64 rng(81);
  const auto fs = random_features(rng, 4);
  const std::vector<FeatureSet> samples = {fs, fs};
  const auto reg = default_registry();
  const DistanceTensor tensor = build_tensor(reg, samples);
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(tensor.at(i, j, k) == 0.0);
}

TEST_CASE("tensor subset shares the selected matrices") {
  std::mt19937_64 rng(82);
  std::vector<FeatureSet> samples;
  for (int i = 0; i < 4; ++i) samples.push_back(random_features(rng, 5));
  const auto reg = default_registry();
  const DistanceTensor tensor = build_tensor(reg, samples);
  const std::vector<std::size_t> pick = {0, 7, 9};
  const DistanceTensor sub = tensor.subset(pick);
  REQUIRE(sub.component_count() == 3);
  for (std::size_t i = 0; i < pick.size(); ++i) {
    CHECK(sub.components()[i] == reg[pick[i]]);
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) CHECK(sub.at(i, j, k) == tensor.at(pick[i], j, k));
  }
}

}  // TEST_SUITE
