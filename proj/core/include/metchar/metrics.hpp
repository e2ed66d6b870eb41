#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "metchar/features.hpp"

namespace metchar {

enum class DistanceOp : int { manhattan = 0, euclidean = 1 };

const std::string& distance_op_suffix(DistanceOp op);  // "md" / "ed"

// One base distance component: a profile vector paired with a distance
// operator, e.g. hbv_md is the Manhattan distance between hbv profiles.
struct ComponentId {
  FeatureId feature;
  DistanceOp op;

  bool operator==(const ComponentId&) const = default;
};

std::string component_name(const ComponentId& c);          // e.g. "vlv_md"
ComponentId parse_component(const std::string& name);      // throws std::invalid_argument

// The ten stock components, in canonical order. Canonical index within a
// registry is the component's identity for subset encodings and reports.
std::vector<ComponentId> default_registry();
// Every feature x operator combination (14 entries), for opt-in use.
std::vector<ComponentId> all_components();

double component_distance(const ComponentId& c, const FeatureSet& a, const FeatureSet& b);

// Non-negative linear combination of base components.
struct WeightedMetric {
  std::vector<ComponentId> components;
  std::vector<double> weights;
};

double combined_distance(const WeightedMetric& m, const FeatureSet& a, const FeatureSet& b);

// Pairwise distances of one dataset under a list of components, computed
// once and shared read-only by every optimizer round and selection trial.
// Matrices are reference-counted so subset views are cheap.
class DistanceTensor {
 public:
  DistanceTensor() = default;
  DistanceTensor(std::vector<ComponentId> components,
                 std::vector<std::shared_ptr<const std::vector<double>>> matrices,
                 std::size_t n_samples);

  std::size_t component_count() const { return components_.size(); }
  std::size_t sample_count() const { return n_; }
  const std::vector<ComponentId>& components() const { return components_; }

  double at(std::size_t component, std::size_t j, std::size_t k) const {
    return (*matrices_[component])[j * n_ + k];
  }

  // View over a subset of components (indices into this tensor).
  DistanceTensor subset(std::span<const std::size_t> indices) const;

 private:
  std::vector<ComponentId> components_;
  std::vector<std::shared_ptr<const std::vector<double>>> matrices_;
  std::size_t n_ = 0;
};

DistanceTensor build_tensor(std::span<const ComponentId> components,
                            std::span<const FeatureSet> features);

// Distance kernels, also used against real-valued centroid vectors.
double manhattan(std::span<const std::int32_t> u, std::span<const std::int32_t> v);
double euclidean(std::span<const std::int32_t> u, std::span<const std::int32_t> v);
double manhattan_mixed(std::span<const std::int32_t> u, std::span<const double> v);
double euclidean_mixed(std::span<const std::int32_t> u, std::span<const double> v);

}  // namespace metchar
