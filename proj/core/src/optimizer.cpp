#include "metchar/optimizer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "metchar/rng.hpp"

namespace metchar {

ConfusionCounts score_pairs(std::span<const int> labels, std::span<const int> assignments) {
  if (labels.size() != assignments.size())
    throw std::invalid_argument("score_pairs: labels/assignments length mismatch");
  if (labels.size() < 2)
    throw std::invalid_argument("score_pairs: need at least 2 samples");

  ConfusionCounts cc;
  const std::size_t n = labels.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const bool same_label = labels[j] == labels[k];
      const bool same_cluster = assignments[j] == assignments[k];
      if (same_label && same_cluster) {
        ++cc.tp;
      } else if (!same_label && !same_cluster) {
        ++cc.tn;
      } else if (!same_label && same_cluster) {
        ++cc.fp;
        cc.fp_pairs.emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k));
      } else {
        ++cc.fn;
        cc.fn_pairs.emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k));
      }
    }
  }
  return cc;
}

std::vector<double> weight_update(std::span<const double> weights, const DistanceTensor& tensor,
                                  const ConfusionCounts& confusion, double epsilon) {
  if (weights.size() != tensor.component_count())
    throw std::invalid_argument("weight_update: weights not aligned with tensor");

  std::vector<double> next(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    double alpha = 0.0;
    for (const auto& [j, k] : confusion.fp_pairs) alpha += weights[i] * tensor.at(i, j, k);
    double beta = 0.0;
    for (const auto& [j, k] : confusion.fn_pairs) beta += weights[i] * tensor.at(i, j, k);
    next[i] = std::max(0.0, weights[i] + epsilon * (alpha - beta));
  }
  return next;
}

TrainedMetric train_metric(std::span<const FeatureSet> features, std::span<const int> labels,
                      std::span<const ComponentId> components, const DistanceTensor& tensor,
                      const MetCharConfig& cfg) {
  if (components.empty()) throw std::invalid_argument("metchar: need at least one component");
  if (features.size() != labels.size())
    throw std::invalid_argument("metchar: features/labels length mismatch");
  if (cfg.iterations < 1) throw std::invalid_argument("metchar: iterations must be >= 1");
  if (cfg.epsilon <= 0.0) throw std::invalid_argument("metchar: epsilon must be positive");
  if (tensor.component_count() != components.size() || tensor.sample_count() != features.size())
    throw std::invalid_argument("metchar: tensor does not match components/dataset");

  std::mt19937_64 rng(cfg.seed);
  std::vector<double> weights(components.size());
  for (double& w : weights) w = unit_double(rng);

  WeightedMetric metric;
  metric.components.assign(components.begin(), components.end());

  TrainedMetric out;
  out.history.reserve(cfg.iterations);

  for (int t = 0; t < cfg.iterations; ++t) {
    metric.weights = weights;
    const ClusteringResult clusters =
        kmeans(features, cfg.k, metric, cfg.seed, cfg.kmeans_max_iter);
    const ConfusionCounts cc = score_pairs(labels, clusters.assignments);
    out.history.push_back({weights, cc.accuracy()});
    if (t + 1 < cfg.iterations) weights = weight_update(weights, tensor, cc, cfg.epsilon);
  }

  out.best_round = 0;
  for (std::size_t t = 1; t < out.history.size(); ++t)
    if (out.history[t].accuracy > out.history[out.best_round].accuracy) out.best_round = t;
  out.accuracy = out.history[out.best_round].accuracy;
  metric.weights = out.history[out.best_round].weights;
  out.metric = std::move(metric);
  return out;
}

TrainedMetric train_metric(std::span<const FeatureSet> features, std::span<const int> labels,
                      std::span<const ComponentId> components, const MetCharConfig& cfg) {
  const DistanceTensor tensor = build_tensor(components, features);
  return train_metric(features, labels, components, tensor, cfg);
}

}  // namespace metchar
