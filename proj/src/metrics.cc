#include "rotrect/metrics.h"

#include <array>
#include <cmath>

#include "rotrect/error.h"
#include "rotrect/pipeline.h"

namespace rotrect {

double Vae(const MatchSet& rectified) {
  if (rectified.empty()) throw EmptySet("VAE of an empty match set");
  double sum = 0.0;
  for (const Match& m : rectified) sum += std::abs(m.left.y() - m.right.y());
  return sum / static_cast<double>(rectified.size());
}

double Nvd(const Homography& h, const ImageSize& size) {
  const Homography top_left = CenteredToTopLeft(h, size);
  const double w = size.width - 1.0, ht = size.height - 1.0;
  const std::array<Eigen::Vector2d, 4> vertices = {
      Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(w, 0.0),
      Eigen::Vector2d(0.0, ht), Eigen::Vector2d(w, ht)};
  double total = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto mapped = top_left.TryMap(vertices[i]);
    if (!mapped) throw MapsToInfinity(i);
    total += (*mapped - vertices[i]).norm();
  }
  return total / std::hypot(static_cast<double>(size.width),
                            static_cast<double>(size.height));
}

MetricReport Evaluate(const HomographyPair& pair, const MatchSet& matches,
                      const ImageSize& size) {
  matches.RequireFrame(PixelFrame::kCentered);
  MetricReport report;
  report.vae = Vae(ApplyToMatches(pair, matches));
  report.nvd_left = Nvd(pair.left, size);
  report.nvd_right = Nvd(pair.right, size);
  report.n_points = matches.size();
  return report;
}

}  // namespace rotrect
