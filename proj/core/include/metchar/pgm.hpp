#pragma once

#include <string>

#include "metchar/glyph.hpp"

namespace metchar {

// Reads an 8-bit PGM (P2 ASCII or P5 binary, maxval 255). Header comments
// starting with '#' are honored. Throws DataError on malformed input.
RawImage read_pgm(const std::string& path);

// Writes a P5 binary PGM with maxval 255. Byte-deterministic.
void write_pgm(const std::string& path, const RawImage& img);

}  // namespace metchar
