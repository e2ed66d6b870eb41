#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "metchar/metrics.hpp"

namespace metchar {

// Cluster center in feature space: one real-valued vector per profile,
// the element-wise mean of the member samples' profiles.
struct Centroid {
  std::array<std::vector<double>, kFeatureCount> vectors;
};

struct ClusteringResult {
  std::vector<int> assignments;  // cluster index per sample, 0..k-1
  int iterations = 0;            // assignment steps executed
  bool converged = false;

  // Diagnostics for the reassignment contract: for iteration i >= 1,
  // objective_prev_assignment[i-1] is the summed sample-to-centroid
  // distance of the previous labeling evaluated against iteration-i
  // centroids, and objective_new_assignment[i-1] the same sum after
  // reassignment. The latter never exceeds the former.
  std::vector<double> objective_prev_assignment;
  std::vector<double> objective_new_assignment;
};

// Lloyd-style k-means under a weighted component metric.
//   - centroids start as k distinct samples chosen by a seeded draw
//   - assignment ties break toward the lowest cluster index
//   - an empty cluster seizes the sample farthest from its own centroid
//   - stops when the labeling repeats or max_iter is reached
// Weights are normalized by their sum before use, so any positive scaling
// of the metric yields the identical result bit for bit. The result is a
// deterministic function of (sample order, k, metric, seed); permuting the
// samples changes the seeded initialization and may change the labeling.
ClusteringResult kmeans(std::span<const FeatureSet> features, int k,
                        const WeightedMetric& metric, std::uint64_t seed,
                        int max_iter = 100);

}  // namespace metchar
