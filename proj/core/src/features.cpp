#include "metchar/features.hpp"

#include <stdexcept>

namespace metchar {

namespace {
const std::array<std::string, kFeatureCount> kFeatureNames = {
    "hbv", "hfv", "hlv", "vfv", "vlv", "dfv", "dlv"};
}

const std::string& feature_name(FeatureId id) {
  return kFeatureNames[static_cast<int>(id)];
}

FeatureId parse_feature_id(const std::string& name) {
  for (int i = 0; i < kFeatureCount; ++i)
    if (kFeatureNames[i] == name) return static_cast<FeatureId>(i);
  throw std::invalid_argument("unknown feature id: " + name);
}

FeatureSet extract_features(const BinaryGlyph& g) {
  const int s = g.size;
  if (s < 1 || g.bits.size() != static_cast<std::size_t>(s) * s)
    throw std::invalid_argument("extract_features: malformed glyph");

  FeatureSet fs;
  fs.size = s;
  const int d = diagonal_count(s);

  auto& hbv = fs[FeatureId::hbv];
  auto& hfv = fs[FeatureId::hfv];
  auto& hlv = fs[FeatureId::hlv];
  auto& vfv = fs[FeatureId::vfv];
  auto& vlv = fs[FeatureId::vlv];
  auto& dfv = fs[FeatureId::dfv];
  auto& dlv = fs[FeatureId::dlv];

  hbv.assign(s, 0);
  hfv.assign(s, s);  // the sentinel of a row/column is its length S
  hlv.assign(s, s);
  vfv.assign(s, s);
  vlv.assign(s, s);
  dfv.resize(d);
  dlv.resize(d);
  for (int t = 0; t < d; ++t) dfv[t] = dlv[t] = diagonal_length(s, t);

  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      if (!g.at(r, c)) continue;
      ++hbv[r];
      if (hfv[r] == s) hfv[r] = c;  // first hit in the row
      hlv[r] = c;
      if (vfv[c] == s) vfv[c] = r;
      vlv[c] = r;
      const int t = r + c;
      const int offset = r - (t < s ? 0 : t - s + 1);  // position along the diagonal walk
      if (dfv[t] == diagonal_length(s, t)) dfv[t] = offset;
      dlv[t] = offset;
    }
  }
  return fs;
}

const std::vector<std::int32_t>& feature_vector(const FeatureSet& fs, FeatureId id) {
  return fs[id];
}

}  // namespace metchar
