#pragma once

// Independent oracles for the property suites. Everything here recomputes
// results from first principles (per-line scans, direct pair enumeration)
// and must stay decoupled from the library's implementation paths.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "metchar/features.hpp"
#include "metchar/glyph.hpp"
#include "metchar/metrics.hpp"
#include "metchar/rng.hpp"

namespace metchar::testing {

// Per-line scan: each row, column and anti-diagonal is walked on its own.
inline FeatureSet naive_features(const BinaryGlyph& g) {
  const int s = g.size;
  FeatureSet fs;
  fs.size = s;

  auto& hbv = fs[FeatureId::hbv];
  auto& hfv = fs[FeatureId::hfv];
  auto& hlv = fs[FeatureId::hlv];
  hbv.assign(s, 0);
  hfv.assign(s, 0);
  hlv.assign(s, 0);
  for (int r = 0; r < s; ++r) {
    int count = 0, first = -1, last = -1;
    for (int c = 0; c < s; ++c) {
      if (g.at(r, c)) {
        ++count;
        if (first < 0) first = c;
        last = c;
      }
    }
    hbv[r] = count;
    hfv[r] = first < 0 ? s : first;
    hlv[r] = last < 0 ? s : last;
  }

  auto& vfv = fs[FeatureId::vfv];
  auto& vlv = fs[FeatureId::vlv];
  vfv.assign(s, 0);
  vlv.assign(s, 0);
  for (int c = 0; c < s; ++c) {
    int first = -1, last = -1;
    for (int r = 0; r < s; ++r) {
      if (g.at(r, c)) {
        if (first < 0) first = r;
        last = r;
      }
    }
    vfv[c] = first < 0 ? s : first;
    vlv[c] = last < 0 ? s : last;
  }

  auto& dfv = fs[FeatureId::dfv];
  auto& dlv = fs[FeatureId::dlv];
  dfv.assign(2 * s - 1, 0);
  dlv.assign(2 * s - 1, 0);
  for (int t = 0; t <= 2 * s - 2; ++t) {
    int first = -1, last = -1, offset = 0, length = 0;
    for (int r = 0; r < s; ++r) {
      const int c = t - r;
      if (c < 0 || c >= s) continue;
      if (g.at(r, c)) {
        if (first < 0) first = offset;
        last = offset;
      }
      ++offset;
      ++length;
    }
    dfv[t] = first < 0 ? length : first;
    dlv[t] = last < 0 ? length : last;
  }
  return fs;
}

struct BruteConfusion {
  std::uint64_t tp = 0, tn = 0, fp = 0, fn = 0;
  std::uint64_t correct() const { return tp + tn; }
  std::uint64_t total() const { return tp + tn + fp + fn; }
};

inline BruteConfusion brute_confusion(std::span<const int> labels,
                                      std::span<const int> clusters) {
  BruteConfusion out;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    for (std::size_t k = j + 1; k < labels.size(); ++k) {
      const bool sl = labels[j] == labels[k];
      const bool sc = clusters[j] == clusters[k];
      if (sl && sc) ++out.tp;
      else if (!sl && !sc) ++out.tn;
      else if (!sl && sc) ++out.fp;
      else ++out.fn;
    }
  }
  return out;
}

// Direct evaluation of the weight update: recompute every pair distance
// from the feature sets, split pairs by label/cluster agreement, and apply
// max(0, w + eps * (alpha - beta)) literally.
inline std::vector<double> weight_update_oracle(std::span<const double> weights,
                                                std::span<const ComponentId> comps,
                                                std::span<const FeatureSet> features,
                                                std::span<const int> labels,
                                                std::span<const int> clusters, double eps) {
  std::vector<double> next(weights.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    double alpha = 0.0, beta = 0.0;
    for (std::size_t j = 0; j < features.size(); ++j) {
      for (std::size_t k = j + 1; k < features.size(); ++k) {
        const bool sl = labels[j] == labels[k];
        const bool sc = clusters[j] == clusters[k];
        if (!sl && sc)
          alpha += weights[i] * component_distance(comps[i], features[j], features[k]);
        else if (sl && !sc)
          beta += weights[i] * component_distance(comps[i], features[j], features[k]);
      }
    }
    const double w = weights[i] + eps * (alpha - beta);
    next[i] = w > 0.0 ? w : 0.0;
  }
  return next;
}

inline BinaryGlyph random_glyph(std::mt19937_64& rng, int size, double density = 0.35,
                                const std::string& label = "x") {
  BinaryGlyph g;
  g.size = size;
  g.label = label;
  g.bits.resize(static_cast<std::size_t>(size) * size);
  for (auto& b : g.bits) b = unit_double(rng) < density ? 1 : 0;
  return g;
}

}  // namespace metchar::testing
