#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "metchar/clustering.hpp"
#include "metchar/metrics.hpp"

namespace metchar {

// Pairwise agreement between labels and clusters over all unordered sample
// pairs: a pair is a true positive when both label and cluster agree, a true
// negative when both differ, a false positive when only the cluster agrees
// and a false negative when only the label does.
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fp_pairs;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> fn_pairs;

  std::uint64_t total() const { return tp + tn + fp + fn; }
  double accuracy() const {
    return total() == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(total());
  }
};

ConfusionCounts score_pairs(std::span<const int> labels, std::span<const int> assignments);

// One update round: for component i, alpha is the weighted distance mass of
// the false-positive pairs and beta that of the false-negative pairs; the
// new weight is max(0, w + epsilon * (alpha - beta)).
std::vector<double> weight_update(std::span<const double> weights, const DistanceTensor& tensor,
                                  const ConfusionCounts& confusion, double epsilon);

struct MetCharConfig {
  double epsilon = 0.05;        // learning rate
  int iterations = 10;          // optimization rounds T
  std::uint64_t seed = 1;       // drives initial weights and clustering init
  int k = 0;                    // cluster count (number of distinct labels)
  int kmeans_max_iter = 100;
};

struct TrainedMetric {
  WeightedMetric metric;  // weights of the best round
  double accuracy = 0.0;  // accuracy of that round
  struct Round {
    std::vector<double> weights;  // weights the round clustered with
    double accuracy = 0.0;
  };
  std::vector<Round> history;  // one entry per round, in order
  std::size_t best_round = 0;  // index into history (earliest max)
};

// Iterative weight optimization: each round clusters with the current
// weights, scores the pairing, and nudges weights by the FP/FN distance
// masses. Initial weights are seeded-uniform in [0,1). The same clustering
// seed is reused every round so accuracy changes trace back to the weights
// alone. Returns the snapshot of the best round, earliest on ties.
TrainedMetric train_metric(std::span<const FeatureSet> features, std::span<const int> labels,
                      std::span<const ComponentId> components, const DistanceTensor& tensor,
                      const MetCharConfig& cfg);

// Convenience overload that builds the component tensor itself.
TrainedMetric train_metric(std::span<const FeatureSet> features, std::span<const int> labels,
                      std::span<const ComponentId> components, const MetCharConfig& cfg);

}  // namespace metchar
