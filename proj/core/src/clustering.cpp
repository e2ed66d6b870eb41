#include "metchar/clustering.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

#include "metchar/rng.hpp"

namespace metchar {

namespace {

double sample_centroid_distance(const FeatureSet& fs, const Centroid& cen,
                                std::span<const ComponentId> comps,
                                std::span<const double> weights) {
  double sum = 0.0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& u = fs[comps[i].feature];
    const auto& v = cen.vectors[static_cast<int>(comps[i].feature)];
    const double d = comps[i].op == DistanceOp::manhattan ? manhattan_mixed(u, v)
                                                          : euclidean_mixed(u, v);
    sum += weights[i] * d;
  }
  return sum;
}

Centroid centroid_from_sample(const FeatureSet& fs) {
  Centroid c;
  for (int f = 0; f < kFeatureCount; ++f) {
    const auto& v = fs.vectors[f];
    c.vectors[f].assign(v.begin(), v.end());
  }
  return c;
}

}  // namespace

ClusteringResult kmeans(std::span<const FeatureSet> features, int k,
                        const WeightedMetric& metric, std::uint64_t seed, int max_iter) {
  const std::size_t n = features.size();
  if (k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (n < static_cast<std::size_t>(k))
    throw std::invalid_argument("kmeans: fewer samples than clusters");
  if (max_iter < 1) throw std::invalid_argument("kmeans: max_iter must be >= 1");
  if (metric.components.size() != metric.weights.size())
    throw std::invalid_argument("kmeans: component/weight count mismatch");

  // Canonical weight scale: the labeling is invariant to positive scaling
  // of the metric, so divide by the weight sum up front and the invariance
  // holds exactly, not just up to rounding.
  std::vector<double> weights = metric.weights;
  double wsum = 0.0;
  for (const double w : weights) {
    if (w < 0.0) throw std::invalid_argument("kmeans: negative weight");
    wsum += w;
  }
  if (wsum > 0.0)
    for (double& w : weights) w /= wsum;

  const auto& comps = metric.components;

  std::mt19937_64 rng(seed);
  const std::vector<std::size_t> init = sample_distinct(rng, n, static_cast<std::size_t>(k));
  std::vector<Centroid> centroids;
  centroids.reserve(k);
  for (const std::size_t idx : init) centroids.push_back(centroid_from_sample(features[idx]));

  ClusteringResult res;
  res.assignments.assign(n, -1);
  std::vector<int> prev;
  std::vector<double> best_dist(n, 0.0);

  for (int iter = 0; iter < max_iter; ++iter) {
    // Objective of the standing labeling against the fresh centroids.
    if (iter > 0) {
      double before = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        before += sample_centroid_distance(features[j], centroids[res.assignments[j]], comps, weights);
      res.objective_prev_assignment.push_back(before);
    }

    double after = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      int best = 0;
      double bd = sample_centroid_distance(features[j], centroids[0], comps, weights);
      for (int c = 1; c < k; ++c) {
        const double d = sample_centroid_distance(features[j], centroids[c], comps, weights);
        if (d < bd) {  // ties keep the lower cluster index
          bd = d;
          best = c;
        }
      }
      res.assignments[j] = best;
      best_dist[j] = bd;
      after += bd;
    }
    if (iter > 0) res.objective_new_assignment.push_back(after);
    res.iterations = iter + 1;

    // Empty-cluster repair: each empty cluster seizes the farthest sample,
    // skipping clusters that would be emptied by losing it.
    std::vector<int> sizes(k, 0);
    for (const int a : res.assignments) ++sizes[a];
    for (int c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t victim = n;
      double far = -1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (sizes[res.assignments[j]] < 2) continue;
        if (best_dist[j] > far) {
          far = best_dist[j];
          victim = j;
        }
      }
      if (victim == n) continue;  // unreachable while n >= k
      --sizes[res.assignments[victim]];
      res.assignments[victim] = c;
      best_dist[victim] = 0.0;  // becomes its own centroid next round
      sizes[c] = 1;
    }

    if (res.assignments == prev) {
      res.converged = true;
      break;
    }
    prev = res.assignments;

    // Update step: mean of members, per profile vector.
    for (int c = 0; c < k; ++c)
      for (int f = 0; f < kFeatureCount; ++f)
        std::fill(centroids[c].vectors[f].begin(), centroids[c].vectors[f].end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      Centroid& cen = centroids[res.assignments[j]];
      for (int f = 0; f < kFeatureCount; ++f) {
        const auto& v = features[j].vectors[f];
        auto& acc = cen.vectors[f];
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
      }
    }
    for (int c = 0; c < k; ++c) {
      const double inv = 1.0 / sizes[c];
      for (int f = 0; f < kFeatureCount; ++f)
        for (double& x : centroids[c].vectors[f]) x *= inv;
    }
  }

  return res;
}

}  // namespace metchar
