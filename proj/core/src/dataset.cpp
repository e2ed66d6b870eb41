#include "metchar/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <unordered_map>

#include "metchar/errors.hpp"
#include "metchar/kvfile.hpp"
#include "metchar/pgm.hpp"
#include "metchar/rng.hpp"

namespace fs = std::filesystem;

namespace metchar {

std::vector<BinaryGlyph> load_manifest(const std::string& path, int normalization_size) {
  if (normalization_size < 1) throw ConfigError("normalization size must be >= 1");
  std::ifstream in(path);
  if (!in) throw DataError(path + ": cannot open manifest");
  const fs::path base = fs::path(path).parent_path();

  std::vector<BinaryGlyph> glyphs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected `path<TAB>label`");
    const std::string rel = line.substr(0, tab);
    const std::string label = trim(line.substr(tab + 1));
    if (rel.empty())
      throw DataError(path + ":" + std::to_string(lineno) + ": empty image path");
    if (label.empty())
      throw DataError(path + ":" + std::to_string(lineno) + ": empty label");

    const fs::path img_path = base / rel;
    RawImage img;
    try {
      img = read_pgm(img_path.string());
    } catch (const DataError& e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    BinaryGlyph g;
    g.size = normalization_size;
    g.bits = normalize(binarize(img), normalization_size);
    g.label = label;
    glyphs.push_back(std::move(g));
  }
  if (glyphs.empty()) throw DataError(path + ": manifest has no entries");
  return glyphs;
}

namespace {

// Inclusive cell bounds of a stroke.
void stroke_extent(const Stroke& s, int& r0, int& c0, int& r1, int& c1) {
  r0 = s.row;
  c0 = s.col;
  switch (s.orientation) {
    case Stroke::Orientation::horizontal:
      r1 = s.row;
      c1 = s.col + s.length - 1;
      break;
    case Stroke::Orientation::vertical:
      r1 = s.row + s.length - 1;
      c1 = s.col;
      break;
    case Stroke::Orientation::diagonal:
      r1 = s.row + s.length - 1;
      c1 = s.col + s.length - 1;
      break;
  }
}

void paint_stroke(BinaryGlyph& g, const Stroke& s, int dr, int dc) {
  int r = s.row + dr, c = s.col + dc;
  for (int i = 0; i < s.length; ++i) {
    g.at(r, c) = 1;
    switch (s.orientation) {
      case Stroke::Orientation::horizontal: ++c; break;
      case Stroke::Orientation::vertical: ++r; break;
      case Stroke::Orientation::diagonal: ++r; ++c; break;
    }
  }
}

}  // namespace

void validate_synth_spec(const SynthSpec& spec) {
  if (spec.class_count < 2) throw ConfigError("synth spec: need at least 2 classes");
  if (spec.samples_per_class < 2) throw ConfigError("synth spec: need at least 2 samples per class");
  if (spec.grid_size < 1) throw ConfigError("synth spec: grid size must be >= 1");
  if (spec.jitter < 0) throw ConfigError("synth spec: jitter must be >= 0");
  if (spec.class_strokes.size() != static_cast<std::size_t>(spec.class_count))
    throw ConfigError("synth spec: stroke templates must cover every class");
  if (!spec.class_labels.empty() &&
      spec.class_labels.size() != static_cast<std::size_t>(spec.class_count))
    throw ConfigError("synth spec: label list must cover every class");
  for (int cls = 0; cls < spec.class_count; ++cls) {
    for (const Stroke& s : spec.class_strokes[cls]) {
      if (s.length < 1) throw ConfigError("synth spec: stroke length must be >= 1");
      int r0, c0, r1, c1;
      stroke_extent(s, r0, c0, r1, c1);
      if (r0 - spec.jitter < 0 || c0 - spec.jitter < 0 ||
          r1 + spec.jitter >= spec.grid_size || c1 + spec.jitter >= spec.grid_size)
        throw ConfigError("synth spec: class " + std::to_string(cls) +
                          " stroke can leave the grid under worst-case jitter");
    }
  }
}

std::vector<BinaryGlyph> generate_synthetic(const SynthSpec& spec) {
  validate_synth_spec(spec);
  std::vector<BinaryGlyph> out;
  out.reserve(static_cast<std::size_t>(spec.class_count) * spec.samples_per_class);
  const int span = 2 * spec.jitter + 1;

  for (int cls = 0; cls < spec.class_count; ++cls) {
    const std::string label = spec.class_labels.empty() ? "c" + std::to_string(cls)
                                                        : spec.class_labels[cls];
    for (int m = 0; m < spec.samples_per_class; ++m) {
      // Offsets keyed by (seed, class, sample) so they are independent of
      // generation order and parallel scheduling.
      const std::uint64_t key =
          splitmix64(spec.seed ^ splitmix64((static_cast<std::uint64_t>(cls) << 32) |
                                            static_cast<std::uint32_t>(m)));
      const int dr = static_cast<int>(key % span) - spec.jitter;
      const int dc = static_cast<int>((key / span) % span) - spec.jitter;

      BinaryGlyph g;
      g.size = spec.grid_size;
      g.bits.assign(static_cast<std::size_t>(spec.grid_size) * spec.grid_size, 0);
      g.label = label;
      for (const Stroke& s : spec.class_strokes[cls]) paint_stroke(g, s, dr, dc);
      out.push_back(std::move(g));
    }
  }
  return out;
}

SynthSpec load_synth_spec(const std::string& path) {
  SynthSpec spec;
  std::vector<KvEntry> entries;
  try {
    entries = parse_kv_file(path);
  } catch (const DataError& e) {
    throw ConfigError(e.what());  // spec files are configuration
  }
  auto to_int = [&](const KvEntry& e) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(e.value, &pos);
      if (pos != e.value.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw ConfigError(path + ":" + std::to_string(e.line) + ": `" + e.key +
                        "` expects an integer, got `" + e.value + "`");
    }
  };

  for (const KvEntry& e : entries) {
    if (e.key == "classes") {
      spec.class_count = to_int(e);
    } else if (e.key == "samples_per_class") {
      spec.samples_per_class = to_int(e);
    } else if (e.key == "size") {
      spec.grid_size = to_int(e);
    } else if (e.key == "jitter") {
      spec.jitter = to_int(e);
    } else if (e.key == "seed") {
      try {
        spec.seed = std::stoull(e.value);
      } catch (...) {
        throw ConfigError(path + ":" + std::to_string(e.line) + ": bad seed");
      }
    } else if (e.key == "label") {
      // label = <class-index> <name>
      const auto parts = split_list(e.value, ' ');
      if (parts.size() != 2)
        throw ConfigError(path + ":" + std::to_string(e.line) +
                          ": `label` expects `<class> <name>`");
      const int cls = std::stoi(parts[0]);
      if (cls < 0) throw ConfigError(path + ":" + std::to_string(e.line) + ": bad class index");
      if (spec.class_labels.size() <= static_cast<std::size_t>(cls))
        spec.class_labels.resize(cls + 1);
      spec.class_labels[cls] = parts[1];
    } else if (e.key == "stroke") {
      // stroke = <class-index> <horizontal|vertical|diagonal> <row> <col> <length>
      const auto parts = split_list(e.value, ' ');
      if (parts.size() != 5)
        throw ConfigError(path + ":" + std::to_string(e.line) +
                          ": `stroke` expects `<class> <orientation> <row> <col> <length>`");
      int cls;
      Stroke s;
      try {
        cls = std::stoi(parts[0]);
        s.row = std::stoi(parts[2]);
        s.col = std::stoi(parts[3]);
        s.length = std::stoi(parts[4]);
      } catch (...) {
        throw ConfigError(path + ":" + std::to_string(e.line) + ": bad stroke numbers");
      }
      if (parts[1] == "horizontal") {
        s.orientation = Stroke::Orientation::horizontal;
      } else if (parts[1] == "vertical") {
        s.orientation = Stroke::Orientation::vertical;
      } else if (parts[1] == "diagonal") {
        s.orientation = Stroke::Orientation::diagonal;
      } else {
        throw ConfigError(path + ":" + std::to_string(e.line) + ": bad orientation `" + parts[1] + "`");
      }
      if (cls < 0) throw ConfigError(path + ":" + std::to_string(e.line) + ": bad class index");
      if (spec.class_strokes.size() <= static_cast<std::size_t>(cls))
        spec.class_strokes.resize(cls + 1);
      spec.class_strokes[cls].push_back(s);
    } else {
      throw ConfigError(path + ":" + std::to_string(e.line) + ": unknown key `" + e.key + "`");
    }
  }
  if (spec.class_strokes.size() < static_cast<std::size_t>(spec.class_count))
    spec.class_strokes.resize(spec.class_count);
  if (!spec.class_labels.empty()) {
    spec.class_labels.resize(spec.class_count);
    for (int i = 0; i < spec.class_count; ++i)
      if (spec.class_labels[i].empty()) spec.class_labels[i] = "c" + std::to_string(i);
  }
  validate_synth_spec(spec);
  return spec;
}

std::string write_dataset_pgm(std::span<const BinaryGlyph> glyphs, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  std::string manifest;
  std::unordered_map<std::string, int> per_label;

  for (const BinaryGlyph& g : glyphs) {
    const int idx = per_label[g.label]++;
    const std::string name = g.label + "_" + std::to_string(idx) + ".pgm";
    RawImage img;
    img.width = g.size;
    img.height = g.size;
    img.pixels.resize(g.bits.size());
    for (std::size_t i = 0; i < g.bits.size(); ++i) img.pixels[i] = g.bits[i] ? 0 : 255;
    write_pgm((dir / name).string(), img);
    manifest += name + "\t" + g.label + "\n";
  }

  const std::string manifest_path = (dir / "manifest.tsv").string();
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(manifest_path + ": cannot open for writing");
  out << manifest;
  return manifest_path;
}

std::pair<std::vector<int>, std::vector<std::string>> label_ids(std::span<const BinaryGlyph> glyphs) {
  std::vector<int> ids;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> table;
  ids.reserve(glyphs.size());
  for (const BinaryGlyph& g : glyphs) {
    auto [it, inserted] = table.try_emplace(g.label, static_cast<int>(names.size()));
    if (inserted) names.push_back(g.label);
    ids.push_back(it->second);
  }
  return {std::move(ids), std::move(names)};
}

}  // namespace metchar
