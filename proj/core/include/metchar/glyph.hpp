#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metchar {

// 8-bit grayscale raster, row-major. Background is gray 255, any other
// value is foreground ink.
struct RawImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::uint8_t at(int r, int c) const { return pixels[static_cast<std::size_t>(r) * width + c]; }
};

// A 0/1 grid of arbitrary dimensions, the intermediate between a raster
// and a size-normalized glyph.
struct BitGrid {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * width + c]; }
  std::uint8_t& at(int r, int c) { return bits[static_cast<std::size_t>(r) * width + c]; }
};

// A size-normalized S x S binary sample with its class label.
struct BinaryGlyph {
  int size = 0;
  std::vector<std::uint8_t> bits;  // row-major, size * size entries in {0,1}
  std::string label;

  std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * size + c]; }
  std::uint8_t& at(int r, int c) { return bits[static_cast<std::size_t>(r) * size + c]; }
};

// Foreground is every gray level except pure background (255).
BitGrid binarize(const RawImage& img);

// Scales the tight bounding box of the foreground to S x S with
// nearest-neighbor sampling. A grid with no foreground maps to the all-zero
// glyph. Pure integer arithmetic, so results are identical on any platform.
std::vector<std::uint8_t> normalize(const BitGrid& grid, int target_size);

// Throws std::invalid_argument when a glyph violates its invariants.
void validate_glyph(const BinaryGlyph& g, int expected_size);

}  // namespace metchar
