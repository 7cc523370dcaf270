#pragma once

#include <cstddef>

#include "rotrect/homography.h"
#include "rotrect/matches.h"

namespace rotrect {

// Vertical alignment error: mean |y_left - y_right| over the set.
// Throws EmptySet for an empty set.
double Vae(const MatchSet& rectified);

// Normalized vertex distance of a centered-frame homography: summed distance
// each image corner (0,0), (W-1,0), (0,H-1), (W-1,H-1) moves, in top-left
// pixels, divided by the diagonal sqrt(W^2 + H^2).
double Nvd(const Homography& h, const ImageSize& size);

struct MetricReport {
  double vae = 0.0;
  double nvd_left = 0.0;
  double nvd_right = 0.0;
  std::size_t n_points = 0;

  double nvd_mean() const { return 0.5 * (nvd_left + nvd_right); }
};

// Metrics of `pair` on centered-frame matches.
MetricReport Evaluate(const HomographyPair& pair, const MatchSet& matches,
                      const ImageSize& size);

}  // namespace rotrect
