#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotrect/camera.h"
#include "rotrect/matches.h"
#include "rotrect/metrics.h"
#include "rotrect/pipeline.h"

namespace rotrect {

// Two latitudinal views of a cube. The cameras sit on a sphere of `radius`
// meters around the origin and look outward; the cube is centered on the
// world z axis (the bisector of the two optical axes) at the mid-range depth.
// Its half-side is the smaller of half the depth range and the size that
// subtends `cube_half_angle_deg` from the origin; a zero depth range uses the
// angular size alone.
//
// roll_deg and pitch_deg are the angles *between* the two views and are split
// evenly: alpha = roll/2, beta = pitch/2.
struct SceneConfig {
  double radius = 0.01;
  double depth_min = 0.5;
  double depth_max = 200.0;
  double roll_deg = 10.0;
  double pitch_deg = 20.0;
  std::size_t n_points = 100;
  double noise_px = 0.0;
  std::uint64_t seed = 0;
  CameraIntrinsics intrinsics{400.0, 400.0, 960, 720};
  double cube_half_angle_deg = 4.0;
  // Fraction of points replaced by outliers drawn uniformly over both images.
  double outlier_fraction = 0.0;

  void Validate() const;
  LatitudinalPose Angles() const;
};

struct SyntheticPair {
  MatchSet matches{PixelFrame::kCentered};        // noisy, with outliers
  MatchSet clean_matches{PixelFrame::kCentered};  // projections before noise
  std::vector<bool> is_outlier;
  std::pair<Pose, Pose> true_poses;
  HomographyPair true_homographies;
  // Cube points drawn, including the ones rejected as not visible in both views.
  std::size_t attempts = 0;
};

// Throws InvalidArgument for a bad config and UnrealizableScene when fewer
// than n_points survive 100 * n_points draws.
SyntheticPair Generate(const SceneConfig& config);

struct Summary {
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Summary Summarize(std::vector<double> values);

struct SweepRow {
  SceneConfig cell;
  std::size_t trials = 0;
  std::size_t succeeded = 0;
  Summary vae;
  Summary nvd;
  // First error message when a trial failed; the cell is then failed.
  std::optional<std::string> error;

  bool failed() const { return error.has_value(); }
};

// Seed of one trial, derived only from (master, cell, trial).
std::uint64_t TrialSeed(std::uint64_t master_seed, std::size_t cell,
                        std::size_t trial);

// Runs Estimate on `trials` scenes per cell. Scene and RANSAC seeds come from
// TrialSeed, so rows do not depend on evaluation order.
std::vector<SweepRow> Sweep(const std::vector<SceneConfig>& grid,
                            std::size_t trials, const RansacConfig& ransac,
                            std::uint64_t master_seed);

// CSV header and row for a sweep table.
std::string SweepCsvHeader();
std::string SweepCsvRow(const SweepRow& row);

}  // namespace rotrect
