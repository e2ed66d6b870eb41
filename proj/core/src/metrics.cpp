#include "metchar/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace metchar {

namespace {
const std::array<std::string, 2> kOpSuffix = {"md", "ed"};

void check_same_length(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument(
        "feature vector lengths differ (" + std::to_string(a) + " vs " + std::to_string(b) +
        "); samples were normalized to different sizes");
}
}  // namespace

const std::string& distance_op_suffix(DistanceOp op) {
  return kOpSuffix[static_cast<int>(op)];
}

std::string component_name(const ComponentId& c) {
  return feature_name(c.feature) + "_" + distance_op_suffix(c.op);
}

ComponentId parse_component(const std::string& name) {
  const auto sep = name.rfind('_');
  if (sep == std::string::npos)
    throw std::invalid_argument("unknown component: " + name);
  const std::string feat = name.substr(0, sep);
  const std::string op = name.substr(sep + 1);
  ComponentId c{};
  c.feature = parse_feature_id(feat);
  if (op == "md") {
    c.op = DistanceOp::manhattan;
  } else if (op == "ed") {
    c.op = DistanceOp::euclidean;
  } else {
    throw std::invalid_argument("unknown component: " + name);
  }
  return c;
}

std::vector<ComponentId> default_registry() {
  static const char* names[] = {"hbv_md", "hfv_md", "vfv_md", "vfv_ed", "dfv_md",
                                "dfv_ed", "hlv_md", "vlv_md", "vlv_ed", "dlv_ed"};
  std::vector<ComponentId> out;
  out.reserve(10);
  for (const char* n : names) out.push_back(parse_component(n));
  return out;
}

std::vector<ComponentId> all_components() {
  std::vector<ComponentId> out;
  out.reserve(kFeatureCount * 2);
  for (const FeatureId f : kAllFeatures)
    for (const DistanceOp op : {DistanceOp::manhattan, DistanceOp::euclidean})
      out.push_back(ComponentId{f, op});
  return out;
}

double manhattan(std::span<const std::int32_t> u, std::span<const std::int32_t> v) {
  check_same_length(u.size(), v.size());
  std::int64_t sum = 0;  // exact for integer profiles
  for (std::size_t i = 0; i < u.size(); ++i)
    sum += std::abs(static_cast<std::int64_t>(u[i]) - v[i]);
  return static_cast<double>(sum);
}

double euclidean(std::span<const std::int32_t> u, std::span<const std::int32_t> v) {
  check_same_length(u.size(), v.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::int64_t d = static_cast<std::int64_t>(u[i]) - v[i];
    sum += d * d;
  }
  return std::sqrt(static_cast<double>(sum));
}

double manhattan_mixed(std::span<const std::int32_t> u, std::span<const double> v) {
  check_same_length(u.size(), v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += std::abs(u[i] - v[i]);
  return sum;
}

double euclidean_mixed(std::span<const std::int32_t> u, std::span<const double> v) {
  check_same_length(u.size(), v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double component_distance(const ComponentId& c, const FeatureSet& a, const FeatureSet& b) {
  const auto& u = a[c.feature];
  const auto& v = b[c.feature];
  return c.op == DistanceOp::manhattan ? manhattan(u, v) : euclidean(u, v);
}

double combined_distance(const WeightedMetric& m, const FeatureSet& a, const FeatureSet& b) {
  if (m.components.size() != m.weights.size())
    throw std::invalid_argument("weighted metric: component/weight count mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < m.components.size(); ++i)
    sum += m.weights[i] * component_distance(m.components[i], a, b);
  return sum;
}

DistanceTensor::DistanceTensor(std::vector<ComponentId> components,
                               std::vector<std::shared_ptr<const std::vector<double>>> matrices,
                               std::size_t n_samples)
    : components_(std::move(components)), matrices_(std::move(matrices)), n_(n_samples) {}

DistanceTensor DistanceTensor::subset(std::span<const std::size_t> indices) const {
  std::vector<ComponentId> comps;
  std::vector<std::shared_ptr<const std::vector<double>>> mats;
  comps.reserve(indices.size());
  mats.reserve(indices.size());
  for (const std::size_t i : indices) {
    comps.push_back(components_[i]);
    mats.push_back(matrices_[i]);
  }
  return DistanceTensor(std::move(comps), std::move(mats), n_);
}

DistanceTensor build_tensor(std::span<const ComponentId> components,
                            std::span<const FeatureSet> features) {
  if (features.size() < 2)
    throw std::invalid_argument("build_tensor: need at least 2 samples");
  const std::size_t n = features.size();
  std::vector<std::shared_ptr<const std::vector<double>>> mats;
  mats.reserve(components.size());
  for (const ComponentId& c : components) {
    auto mat = std::make_shared<std::vector<double>>(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double d = component_distance(c, features[j], features[k]);
        (*mat)[j * n + k] = d;
        (*mat)[k * n + j] = d;
      }
    }
    mats.push_back(std::move(mat));
  }
  return DistanceTensor(std::vector<ComponentId>(components.begin(), components.end()),
                        std::move(mats), n);
}

}  // namespace metchar
