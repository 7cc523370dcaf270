#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

#include "rotrect/homography.h"
#include "rotrect/matches.h"

namespace rotrect {

// Match file: CSV with header "x1,y1,x2,y2" and one correspondence per line
// in top-left pixel coordinates. Reading rejects non-finite values and
// malformed lines (with their line number) and files with fewer than 2 rows.
MatchSet ReadMatchCsv(std::istream& in);
MatchSet ReadMatchCsv(const std::string& path);
// Writes shortest round-trip decimal representations. `matches` must be in
// the top-left frame.
void WriteMatchCsv(std::ostream& out, const MatchSet& matches);
void WriteMatchCsv(const std::string& path, const MatchSet& matches);

// Homography file: JSON object
//   {"width", "height", "frame": "centered", "H1": [9], "H2": [9],
//    "vae", "nvd": [left, right]}
// with row-major matrices normalized to a unit (3,3) entry.
struct HomographyFile {
  ImageSize size;
  std::string frame = "centered";
  Eigen::Matrix3d H1 = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d H2 = Eigen::Matrix3d::Identity();
  double vae = 0.0;
  std::array<double, 2> nvd = {0.0, 0.0};

  HomographyPair pair() const { return {Homography(H1), Homography(H2)}; }
};

HomographyFile MakeHomographyFile(const HomographyPair& pair,
                                  const ImageSize& size, double vae,
                                  double nvd_left, double nvd_right);

std::string SerializeHomographyFile(const HomographyFile& file);
HomographyFile ParseHomographyFile(const std::string& text);
HomographyFile ReadHomographyFile(const std::string& path);
void WriteHomographyFile(const std::string& path, const HomographyFile& file);

}  // namespace rotrect
