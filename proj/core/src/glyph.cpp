#include "metchar/glyph.hpp"

#include <stdexcept>
#include <string>

namespace metchar {

BitGrid binarize(const RawImage& img) {
  if (img.width < 1 || img.height < 1)
    throw std::invalid_argument("binarize: image must be at least 1x1");
  if (img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
    throw std::invalid_argument("binarize: pixel count does not match dimensions");

  BitGrid out;
  out.width = img.width;
  out.height = img.height;
  out.bits.resize(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i)
    out.bits[i] = img.pixels[i] <= 254 ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> normalize(const BitGrid& grid, int target_size) {
  if (grid.width < 1 || grid.height < 1 || grid.bits.empty())
    throw std::invalid_argument("normalize: empty grid");
  if (target_size < 1) throw std::invalid_argument("normalize: target size must be >= 1");

  int top = grid.height, bottom = -1, left = grid.width, right = -1;
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      if (!grid.at(r, c)) continue;
      if (r < top) top = r;
      if (r > bottom) bottom = r;
      if (c < left) left = c;
      if (c > right) right = c;
    }
  }

  const int s = target_size;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(s) * s, 0);
  if (bottom < 0) return out;  // no foreground at all

  const int box_h = bottom - top + 1;
  const int box_w = right - left + 1;
  for (int r = 0; r < s; ++r) {
    const int src_r = top + static_cast<int>((static_cast<std::int64_t>(r) * box_h) / s);
    for (int c = 0; c < s; ++c) {
      const int src_c = left + static_cast<int>((static_cast<std::int64_t>(c) * box_w) / s);
      out[static_cast<std::size_t>(r) * s + c] = grid.at(src_r, src_c);
    }
  }
  return out;
}

void validate_glyph(const BinaryGlyph& g, int expected_size) {
  if (g.size != expected_size)
    throw std::invalid_argument("glyph size " + std::to_string(g.size) +
                                " does not match dataset size " + std::to_string(expected_size));
  if (g.bits.size() != static_cast<std::size_t>(g.size) * g.size)
    throw std::invalid_argument("glyph bit count does not match size");
  for (const auto b : g.bits)
    if (b > 1) throw std::invalid_argument("glyph bits must be 0 or 1");
  if (g.label.empty()) throw std::invalid_argument("glyph label must be non-empty");
}

}  // namespace metchar
