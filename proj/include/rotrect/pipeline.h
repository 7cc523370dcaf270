#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rotrect/homography.h"
#include "rotrect/matches.h"
#include "rotrect/solver.h"

namespace rotrect {

struct RansacConfig {
  int iterations = 1000;
  std::uint64_t seed = 0;
  // Stop as soon as the best VAE drops below this many pixels.
  double early_exit_vae = 0.05;
  double h23 = 0.0;
  H22Mode h22_mode = H22Mode::kPaper;
  std::size_t min_matches = 2;

  void Validate() const;
};

struct RectificationResult {
  HomographyPair homographies;
  HyPair hy;
  ShearPair shear;
  SolverSolution solution;
  // VAE over all matches of the winning Hy pair (equal to that of the
  // composed homographies, since the shear leaves rows alone).
  double vae = 0.0;
  double nvd_left = 0.0;
  double nvd_right = 0.0;
  int iterations_used = 0;
  // Samples that were singular, exceeded the perspective limit, or sent a
  // match to infinity.
  int rejected_samples = 0;
  std::pair<std::size_t, std::size_t> sample_indices{0, 0};
  // Best VAE after each iteration; non-increasing, +inf before the first
  // valid sample.
  std::vector<double> best_vae_trace;
};

// Robust two-point estimation over centered-frame matches: each iteration
// draws two distinct matches, builds the Hy pair, and scores it by VAE over
// every match; the best pair gets its shear once after the loop. Identical
// inputs give bit-identical results; ties keep the earliest iteration.
//
// Throws NotEnoughMatches, AllSamplesDegenerate, FrameMismatch.
RectificationResult Estimate(const MatchSet& matches, const ImageSize& size,
                             const RansacConfig& config);

// Maps left points through pair.left and right points through pair.right,
// preserving the frame. Throws MapsToInfinity with the offending index.
MatchSet ApplyToMatches(const HomographyPair& pair, const MatchSet& matches);

// One pass of the minimal-sample chain: two-point solve, h22 selection, Hy
// pair, shear, composition. nullopt when the sample is degenerate or exceeds
// the perspective limit.
std::optional<HomographyPair> RectifyFromSample(const Match& first,
                                                const Match& second,
                                                const ImageSize& size,
                                                H22Mode mode, double h23);

}  // namespace rotrect
