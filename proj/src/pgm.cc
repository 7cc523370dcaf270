#include "rotrect/pgm.h"

#include <bit>
#include <cctype>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "rotrect/error.h"

namespace rotrect {
namespace {

// Reads the next whitespace-delimited header integer, skipping '#' comments.
int ReadHeaderInt(std::istream& in) {
  int c = in.peek();
  while (c != EOF) {
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(c)) {
      in.get();
    } else {
      break;
    }
    c = in.peek();
  }
  int value = 0;
  if (!(in >> value)) throw FormatError("malformed PGM header");
  return value;
}

}  // namespace

GrayImage ReadPgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') {
    throw FormatError("not a binary PGM (P5) file");
  }
  const int width = ReadHeaderInt(in);
  const int height = ReadHeaderInt(in);
  const int maxval = ReadHeaderInt(in);
  if (width <= 0 || height <= 0) throw FormatError("PGM has non-positive size");
  if (maxval != 255) throw FormatError("only maxval 255 PGM files are supported");
  // Exactly one whitespace byte separates the header from the raster.
  if (!std::isspace(in.get())) throw FormatError("malformed PGM header");

  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(width) * height);
  if (!in.read(reinterpret_cast<char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()))) {
    throw FormatError("truncated PGM raster");
  }
  return GrayImage::FromBytes(width, height, bytes);
}

GrayImage ReadPgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return ReadPgm(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WritePgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  const std::vector<std::uint8_t> bytes = image.ToBytes();
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

void WritePgm(const std::string& path, const GrayImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  WritePgm(out, image);
  if (!out) throw FormatError("failed writing " + path);
}

void WritePfm(const std::string& path, int width, int height,
              const std::vector<float>& values) {
  static_assert(std::endian::native == std::endian::little,
                "PFM writer assumes a little-endian host");
  if (values.size() != static_cast<std::size_t>(width) * height) {
    throw DimensionMismatch("PFM sample count does not match its size");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << "Pf\n" << width << ' ' << height << "\n-1.0\n";
  for (int y = height - 1; y >= 0; --y) {
    out.write(reinterpret_cast<const char*>(values.data() +
                                            static_cast<std::size_t>(y) * width),
              static_cast<std::streamsize>(width * sizeof(float)));
  }
  if (!out) throw FormatError("failed writing " + path);
}

}  // namespace rotrect
