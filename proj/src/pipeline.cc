#include "rotrect/pipeline.h"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "rotrect/error.h"
#include "rotrect/metrics.h"

namespace rotrect {
namespace {

constexpr double kMinDenominator = 1e-12;

// Row of a point under an Hy matrix, or nullopt at infinity.
std::optional<double> RectifiedRow(const HyParams& hy, const Eigen::Vector2d& p) {
  const double w = hy.h31 * p.x() + hy.h33;
  if (!(std::abs(w) > kMinDenominator)) return std::nullopt;
  return (hy.h21 * p.x() + hy.h22 * p.y() + hy.h23) / w;
}

std::optional<double> ScoreVae(const HyPair& hy, const MatchSet& matches) {
  double sum = 0.0;
  for (const Match& m : matches) {
    const auto yl = RectifiedRow(hy.left, m.left);
    const auto yr = RectifiedRow(hy.right, m.right);
    if (!yl || !yr) return std::nullopt;
    sum += std::abs(*yl - *yr);
  }
  const double vae = sum / static_cast<double>(matches.size());
  if (!std::isfinite(vae)) return std::nullopt;
  return vae;
}

}  // namespace

void RansacConfig::Validate() const {
  if (iterations < 1) throw InvalidArgument("iterations must be >= 1");
  if (!(early_exit_vae >= 0.0)) {
    throw InvalidArgument("early_exit_vae must be >= 0");
  }
  if (min_matches < 2) throw InvalidArgument("min_matches must be >= 2");
  if (!std::isfinite(h23)) throw InvalidArgument("h23 must be finite");
}

RectificationResult Estimate(const MatchSet& matches, const ImageSize& size,
                             const RansacConfig& config) {
  config.Validate();
  matches.RequireFrame(PixelFrame::kCentered);
  if (matches.size() < config.min_matches) {
    throw NotEnoughMatches("need at least " + std::to_string(config.min_matches) +
                           " matches, got " + std::to_string(matches.size()));
  }

  const std::size_t n = matches.size();
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<std::size_t> pick_first(0, n - 1);
  std::uniform_int_distribution<std::size_t> pick_second(0, n - 2);

  RectificationResult result;
  result.best_vae_trace.reserve(config.iterations);
  double best = std::numeric_limits<double>::infinity();
  bool found = false;

  for (int it = 0; it < config.iterations; ++it) {
    const std::size_t i = pick_first(rng);
    std::size_t j = pick_second(rng);
    if (j >= i) ++j;
    result.iterations_used = it + 1;

    std::optional<double> vae;
    HyPair hy;
    const auto sol = TrySolveTwoPoint(matches[i], matches[j], size);
    if (sol) {
      if (const auto h22 = TryPickH22(sol->t1, size.width, config.h22_mode)) {
        hy = BuildHyPair(*sol, *h22, config.h23);
        vae = ScoreVae(hy, matches);
      }
    }
    if (!vae) {
      ++result.rejected_samples;
    } else if (*vae < best) {
      best = *vae;
      found = true;
      result.hy = hy;
      result.solution = *sol;
      result.sample_indices = {i, j};
    }
    result.best_vae_trace.push_back(best);
    if (found && best < config.early_exit_vae) break;
  }

  if (!found) {
    throw AllSamplesDegenerate("all " + std::to_string(result.iterations_used) +
                               " samples were degenerate");
  }

  result.vae = best;
  result.shear = ComputeShearPair(result.hy, size);
  result.homographies = {Compose(result.shear.left, result.hy.left, Side::kLeft),
                         Compose(result.shear.right, result.hy.right, Side::kRight)};
  result.nvd_left = Nvd(result.homographies.left, size);
  result.nvd_right = Nvd(result.homographies.right, size);
  return result;
}

MatchSet ApplyToMatches(const HomographyPair& pair, const MatchSet& matches) {
  MatchSet out(matches.frame());
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto l = pair.left.TryMap(matches[i].left);
    const auto r = pair.right.TryMap(matches[i].right);
    if (!l || !r) throw MapsToInfinity(i);
    out.Add(Match{*l, *r});
  }
  return out;
}

}  // namespace rotrect

namespace rotrect {

std::optional<HomographyPair> RectifyFromSample(const Match& first,
                                                const Match& second,
                                                const ImageSize& size,
                                                H22Mode mode, double h23) {
  const auto sol = TrySolveTwoPoint(first, second, size);
  if (!sol) return std::nullopt;
  const auto h22 = TryPickH22(sol->t1, size.width, mode);
  if (!h22) return std::nullopt;
  const HyPair hy = BuildHyPair(*sol, *h22, h23);
  const ShearPair shear = ComputeShearPair(hy, size);
  return HomographyPair{Compose(shear.left, hy.left, Side::kLeft),
                        Compose(shear.right, hy.right, Side::kRight)};
}

}  // namespace rotrect
