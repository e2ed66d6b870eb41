#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "metchar/dataset.hpp"
#include "metchar/errors.hpp"
#include "metchar/features.hpp"
#include "metchar/metrics.hpp"
#include "metchar/pgm.hpp"

using namespace metchar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("metchar_ds_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

void write_square_pgm(const fs::path& p, int size, std::uint8_t fg_value) {
  RawImage img;
  img.width = img.height = size;
  img.pixels.assign(static_cast<std::size_t>(size) * size, 255);
  for (int r = 1; r < size - 1; ++r)
    for (int c = 1; c < size - 1; ++c) img.pixels[static_cast<std::size_t>(r) * size + c] = fg_value;
  write_pgm(p.string(), img);
}

SynthSpec two_class_spec() {
  SynthSpec spec;
  spec.class_count = 2;
  spec.samples_per_class = 4;
  spec.grid_size = 24;
  spec.jitter = 1;
  spec.seed = 99;
  // vertical strokes with disjoint row spans, well inside the grid
  spec.class_strokes = {
      {Stroke{Stroke::Orientation::vertical, 2, 6, 8}},
      {Stroke{Stroke::Orientation::vertical, 13, 16, 8}},
  };
  return spec;
}

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("manifest preserves order and labels") {
  TempDir dir;
  write_square_pgm(dir.path / "a.pgm", 8, 0);
  write_square_pgm(dir.path / "b.pgm", 12, 100);
  {
    std::ofstream m(dir.path / "manifest.tsv");
    m << "# comment line\n";
    m << "a.pgm\talpha\n";
    m << "b.pgm\tbeta\n";
  }
  const auto glyphs = load_manifest((dir.path / "manifest.tsv").string(), 16);
  REQUIRE(glyphs.size() == 2);
  CHECK(glyphs[0].label == "alpha");
  CHECK(glyphs[1].label == "beta");
  for (const auto& g : glyphs) {
    CHECK(g.size == 16);
    CHECK(g.bits.size() == 256);
    validate_glyph(g, 16);
  }
}

TEST_CASE("manifest errors carry the line number") {
  TempDir dir;
  write_square_pgm(dir.path / "a.pgm", 8, 0);

  {
    std::ofstream m(dir.path / "missing.tsv");
    m << "a.pgm\tok\n";
    m << "nope.pgm\tmissing\n";
  }
  CHECK_THROWS_WITH_AS(load_manifest((dir.path / "missing.tsv").string(), 8),
                       doctest::Contains("missing.tsv:2"), DataError);

  {
    std::ofstream m(dir.path / "blank_label.tsv");
    m << "a.pgm\t\n";
  }
  CHECK_THROWS_WITH_AS(load_manifest((dir.path / "blank_label.tsv").string(), 8),
                       doctest::Contains("blank_label.tsv:1"), DataError);

  {
    std::ofstream m(dir.path / "no_tab.tsv");
    m << "a.pgm ok\n";
  }
  CHECK_THROWS_WITH_AS(load_manifest((dir.path / "no_tab.tsv").string(), 8),
                       doctest::Contains("no_tab.tsv:1"), DataError);

  CHECK_THROWS_AS(load_manifest((dir.path / "does_not_exist.tsv").string(), 8), DataError);
}

TEST_CASE("synthetic generation is a pure function of the spec") {
  const SynthSpec spec = two_class_spec();
  const auto a = generate_synthetic(spec);
  const auto b = generate_synthetic(spec);
  REQUIRE(a.size() == 8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].bits == b[i].bits);
    CHECK(a[i].label == b[i].label);
    validate_glyph(a[i], spec.grid_size);
  }
}

TEST_CASE("zero jitter makes all samples of a class identical") {
  SynthSpec spec = two_class_spec();
  spec.jitter = 0;
  const auto glyphs = generate_synthetic(spec);
  for (int cls = 0; cls < 2; ++cls)
    for (int m = 1; m < spec.samples_per_class; ++m)
      CHECK(glyphs[cls * spec.samples_per_class + m].bits ==
            glyphs[cls * spec.samples_per_class].bits);
}

TEST_CASE("strokes that can leave the grid under jitter are rejected") {
  SynthSpec spec = two_class_spec();
  spec.class_strokes[1][0].row = 16;  // 16 + 8 - 1 + jitter = 24, off the 24-grid
  CHECK_THROWS_AS(generate_synthetic(spec), ConfigError);

  SynthSpec degenerate = two_class_spec();
  degenerate.class_count = 1;
  degenerate.class_strokes.resize(1);
  CHECK_THROWS_AS(generate_synthetic(degenerate), ConfigError);
}

TEST_CASE("disjoint stroke classes separate under hbv_md") {
  // every intra-class pair must be closer than every inter-class pair,
  // checked by full pairwise enumeration
  const SynthSpec spec = two_class_spec();
  const auto glyphs = generate_synthetic(spec);
  std::vector<FeatureSet> features;
  for (const auto& g : glyphs) features.push_back(extract_features(g));
  const ComponentId hbv_md = parse_component("hbv_md");

  double max_intra = 0.0, min_inter = 1e300;
  for (std::size_t i = 0; i < glyphs.size(); ++i) {
    for (std::size_t j = i + 1; j < glyphs.size(); ++j) {
      const double d = component_distance(hbv_md, features[i], features[j]);
      if (glyphs[i].label == glyphs[j].label)
        max_intra = std::max(max_intra, d);
      else
        min_inter = std::min(min_inter, d);
    }
  }
  CHECK(max_intra < min_inter);
}

TEST_CASE("pgm emission round-trips through the manifest loader") {
  TempDir dir;
  SynthSpec spec = two_class_spec();
  spec.jitter = 0;
  const auto glyphs = generate_synthetic(spec);
  const std::string manifest = write_dataset_pgm(glyphs, dir.path.string());
  const auto loaded = load_manifest(manifest, spec.grid_size);
  REQUIRE(loaded.size() == glyphs.size());
  for (std::size_t i = 0; i < glyphs.size(); ++i) CHECK(loaded[i].label == glyphs[i].label);
}

TEST_CASE("label table densifies in first-appearance order") {
  std::vector<BinaryGlyph> glyphs(4);
  for (auto& g : glyphs) {
    g.size = 1;
    g.bits = {0};
  }
  glyphs[0].label = "b";
  glyphs[1].label = "a";
  glyphs[2].label = "b";
  glyphs[3].label = "c";
  const auto [ids, names] = label_ids(glyphs);
  CHECK(ids == std::vector<int>{0, 1, 0, 2});
  CHECK(names == std::vector<std::string>{"b", "a", "c"});
}

}  // TEST_SUITE
