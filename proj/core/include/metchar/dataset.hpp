#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metchar/glyph.hpp"

namespace metchar {

// Loads a `path<TAB>label` manifest, binarizing and size-normalizing every
// referenced PGM to S x S. Paths are resolved relative to the manifest's
// directory; '#' lines are comments. Errors carry the offending line number.
std::vector<BinaryGlyph> load_manifest(const std::string& path, int normalization_size);

struct Stroke {
  enum class Orientation { horizontal, vertical, diagonal };
  Orientation orientation = Orientation::horizontal;
  int row = 0;     // starting cell
  int col = 0;
  int length = 1;  // cells covered; diagonal runs down-right
};

// Deterministic synthetic dataset: every class is a fixed stroke template,
// every sample the template translated by a seeded per-sample jitter offset.
struct SynthSpec {
  int class_count = 0;
  int samples_per_class = 0;
  int grid_size = 0;
  int jitter = 0;  // offsets drawn from [-jitter, +jitter] per axis
  std::uint64_t seed = 0;
  std::vector<std::vector<Stroke>> class_strokes;  // one template per class
  std::vector<std::string> class_labels;           // defaults to c0, c1, ...
};

// Throws ConfigError when the spec is inconsistent or a stroke can leave
// the grid under worst-case jitter.
void validate_synth_spec(const SynthSpec& spec);

// Pure function of the spec: bit-identical output across runs and platforms.
// Jitter offsets derive from (seed, class, sample), never from draw order.
std::vector<BinaryGlyph> generate_synthetic(const SynthSpec& spec);

// Flat key=value reader for synth spec files (see README for the schema).
SynthSpec load_synth_spec(const std::string& path);

// Writes glyphs as P5 PGMs (ink 0 on background 255) plus a manifest.tsv
// into out_dir. Returns the manifest path.
std::string write_dataset_pgm(std::span<const BinaryGlyph> glyphs, const std::string& out_dir);

// Densifies labels into ids (first-appearance order) and the id->name table.
std::pair<std::vector<int>, std::vector<std::string>> label_ids(std::span<const BinaryGlyph> glyphs);

}  // namespace metchar
