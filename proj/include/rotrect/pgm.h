#pragma once

#include <iosfwd>
#include <string>

#include "rotrect/imaging.h"

namespace rotrect {

// Binary PGM (P5, maxval 255). Header comments are skipped on read; writes
// emit "P5\n<w> <h>\n255\n" followed by the quantized samples.
GrayImage ReadPgm(std::istream& in);
GrayImage ReadPgm(const std::string& path);
void WritePgm(std::ostream& out, const GrayImage& image);
void WritePgm(const std::string& path, const GrayImage& image);

// Little-endian grayscale PFM ("Pf", scale -1, rows stored bottom to top).
void WritePfm(const std::string& path, int width, int height,
              const std::vector<float>& values);

}  // namespace rotrect
