#include "metchar/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "metchar/errors.hpp"

namespace metchar {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw DataError(path + ": " + why);
}

// Skips whitespace and '#' comment lines, then reads one unsigned decimal.
long read_header_int(std::istream& in, const std::string& path) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (std::isspace(ch)) {
      ch = in.get();
    } else {
      break;
    }
  }
  if (ch == EOF || !std::isdigit(ch)) fail(path, "malformed PGM header");
  long value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    if (value > std::numeric_limits<int>::max()) fail(path, "PGM header value out of range");
    ch = in.get();
  }
  if (ch != EOF) in.unget();
  return value;
}

}  // namespace

RawImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");

  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (m0 != 'P' || (m1 != '2' && m1 != '5')) fail(path, "not a P2/P5 PGM file");
  const bool binary = m1 == '5';

  RawImage img;
  img.width = static_cast<int>(read_header_int(in, path));
  img.height = static_cast<int>(read_header_int(in, path));
  const long maxval = read_header_int(in, path);
  if (img.width < 1 || img.height < 1) fail(path, "invalid dimensions");
  if (maxval != 255) fail(path, "unsupported maxval " + std::to_string(maxval) + " (must be 255)");

  const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
  img.pixels.resize(count);

  if (binary) {
    const int sep = in.get();  // single whitespace byte before the raster
    if (sep == EOF || !std::isspace(sep)) fail(path, "missing raster separator");
    in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) fail(path, "truncated raster");
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const long v = read_header_int(in, path);
      if (v > 255) fail(path, "sample value out of range");
      img.pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

void write_pgm(const std::string& path, const RawImage& img) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw DataError(path + ": write failed");
}

}  // namespace metchar
