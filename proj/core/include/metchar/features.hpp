#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "metchar/glyph.hpp"

namespace metchar {

enum class FeatureId : int { hbv = 0, hfv, hlv, vfv, vlv, dfv, dlv };

inline constexpr int kFeatureCount = 7;
inline constexpr std::array<FeatureId, kFeatureCount> kAllFeatures = {
    FeatureId::hbv, FeatureId::hfv, FeatureId::hlv, FeatureId::vfv,
    FeatureId::vlv, FeatureId::dfv, FeatureId::dlv};

const std::string& feature_name(FeatureId id);
FeatureId parse_feature_id(const std::string& name);  // throws std::invalid_argument

// The seven profile vectors of one glyph:
//   hbv[r]  foreground count of row r
//   hfv[r] / hlv[r]  column of the first / last foreground bit of row r
//   vfv[c] / vlv[c]  row of the first / last foreground bit of column c
//   dfv[t] / dlv[t]  offset of the first / last foreground bit along
//                    anti-diagonal t (cells with r + c == t, walked in
//                    increasing r), t in [0, 2S-2]
// A line without foreground stores its own length as an out-of-range
// sentinel in the first/last vectors.
struct FeatureSet {
  int size = 0;  // S of the glyph the set was extracted from
  std::array<std::vector<std::int32_t>, kFeatureCount> vectors;

  const std::vector<std::int32_t>& operator[](FeatureId id) const {
    return vectors[static_cast<int>(id)];
  }
  std::vector<std::int32_t>& operator[](FeatureId id) {
    return vectors[static_cast<int>(id)];
  }
};

// Number of anti-diagonals of an S x S grid.
inline int diagonal_count(int size) { return 2 * size - 1; }

// Cell count of anti-diagonal t.
inline int diagonal_length(int size, int t) {
  const int lo = t < size ? 0 : t - size + 1;
  const int hi = t < size ? t : size - 1;
  return hi - lo + 1;
}

FeatureSet extract_features(const BinaryGlyph& g);

// Accessor by id; same reference as operator[], kept for symmetry with
// the string-keyed call sites (config parsing goes through parse_feature_id).
const std::vector<std::int32_t>& feature_vector(const FeatureSet& fs, FeatureId id);

}  // namespace metchar
