#include "rotrect/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "rotrect/error.h"

namespace rotrect {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr std::size_t kAttemptsPerPoint = 100;

bool InsideImage(const Point2& p, const ImageSize& size) {
  const Eigen::Vector2d half = CenterOffset(size);
  return std::abs(p.x()) <= half.x() && std::abs(p.y()) <= half.y();
}

// Uniform point on the surface of an axis-aligned cube.
Eigen::Vector3d SampleCubeFace(const Eigen::Vector3d& center, double half_side,
                               std::mt19937_64& rng) {
  std::uniform_int_distribution<int> face_dist(0, 5);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const int face = face_dist(rng);
  const double u = coord(rng);
  const double v = coord(rng);
  const double side = face % 2 == 0 ? -1.0 : 1.0;
  Eigen::Vector3d p;
  switch (face / 2) {
    case 0:
      p = {side, u, v};
      break;
    case 1:
      p = {u, side, v};
      break;
    default:
      p = {u, v, side};
      break;
  }
  return center + half_side * p;
}

}  // namespace

void SceneConfig::Validate() const {
  intrinsics.Validate();
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("radius must be positive");
  }
  if (!(depth_min > 0.0) || !(depth_min <= depth_max) || !std::isfinite(depth_max)) {
    throw InvalidArgument("need 0 < depth_min <= depth_max");
  }
  if (n_points < 2) throw InvalidArgument("need at least 2 points");
  if (!(noise_px >= 0.0) || !std::isfinite(noise_px)) {
    throw InvalidArgument("noise must be >= 0");
  }
  if (!(roll_deg >= 0.0 && roll_deg < 180.0) ||
      !(pitch_deg >= 0.0 && pitch_deg < 180.0)) {
    throw InvalidArgument("roll and pitch must lie in [0, 180) degrees");
  }
  if (!(cube_half_angle_deg > 0.0 && cube_half_angle_deg < 45.0)) {
    throw InvalidArgument("cube half angle must lie in (0, 45) degrees");
  }
  if (!(outlier_fraction >= 0.0 && outlier_fraction <= 1.0)) {
    throw InvalidArgument("outlier fraction must lie in [0, 1]");
  }
}

LatitudinalPose SceneConfig::Angles() const {
  return {0.5 * roll_deg * kDegToRad, 0.5 * pitch_deg * kDegToRad};
}

SyntheticPair Generate(const SceneConfig& config) {
  config.Validate();
  const LatitudinalPose angles = config.Angles();
  const CameraIntrinsics& k = config.intrinsics;
  const ImageSize size = k.size();

  SyntheticPair out;
  out.true_poses = LatitudinalPosePair(angles);
  out.true_homographies = CalibratedRectifyingPair(angles, k);
  const auto& [left_pose, right_pose] = out.true_poses;

  // Scene units are sphere radii, so the unit-sphere poses stay untouched.
  const double center_depth = 0.5 * (config.depth_min + config.depth_max);
  const double angular_half =
      center_depth * std::tan(config.cube_half_angle_deg * kDegToRad);
  const double range_half = 0.5 * (config.depth_max - config.depth_min);
  const double half_side =
      range_half > 0.0 ? std::min(range_half, angular_half) : angular_half;
  const Eigen::Vector3d center(0.0, 0.0, center_depth / config.radius);
  const double half_side_units = half_side / config.radius;

  std::mt19937_64 rng(config.seed);
  const std::size_t budget = kAttemptsPerPoint * config.n_points;
  while (out.clean_matches.size() < config.n_points) {
    if (out.attempts >= budget) {
      throw UnrealizableScene(
          "only " + std::to_string(out.clean_matches.size()) + " of " +
          std::to_string(config.n_points) + " points visible in both views after " +
          std::to_string(budget) + " draws");
    }
    ++out.attempts;
    const Eigen::Vector3d p = SampleCubeFace(center, half_side_units, rng);
    try {
      const Point2 l = Project(p, left_pose, k);
      const Point2 r = Project(p, right_pose, k);
      if (!InsideImage(l, size) || !InsideImage(r, size)) continue;
      out.clean_matches.Add(l, r);
    } catch (const PointBehindCamera&) {
    }
  }

  // Noise is drawn after sampling so the clean scene does not depend on it.
  std::normal_distribution<double> noise(0.0, config.noise_px);
  const Eigen::Vector2d half = CenterOffset(size);
  std::uniform_real_distribution<double> ux(-half.x(), half.x());
  std::uniform_real_distribution<double> uy(-half.y(), half.y());
  for (const Match& m : out.clean_matches) {
    Match noisy = m;
    if (config.noise_px > 0.0) {
      noisy.left += Eigen::Vector2d(noise(rng), noise(rng));
      noisy.right += Eigen::Vector2d(noise(rng), noise(rng));
    }
    out.matches.Add(noisy);
  }
  out.is_outlier.assign(config.n_points, false);
  if (config.outlier_fraction > 0.0) {
    const auto n_out = static_cast<std::size_t>(
        std::llround(config.outlier_fraction * static_cast<double>(config.n_points)));
    std::vector<std::size_t> order(config.n_points);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < n_out; ++i) {
      const std::size_t idx = order[i];
      out.is_outlier[idx] = true;
      out.matches[idx] = Match{{ux(rng), uy(rng)}, {ux(rng), uy(rng)}};
    }
  }
  return out;
}

Summary Summarize(std::vector<double> values) {
  Summary s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  const std::size_t n = values.size();
  s.mean = sum / static_cast<double>(n);
  s.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  s.min = values.front();
  s.max = values.back();
  return s;
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::size_t cell,
                        std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(cell),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<SweepRow> Sweep(const std::vector<SceneConfig>& grid,
                            std::size_t trials, const RansacConfig& ransac,
                            std::uint64_t master_seed) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (std::size_t c = 0; c < grid.size(); ++c) {
    SweepRow row;
    row.cell = grid[c];
    row.trials = trials;
    std::vector<double> vaes, nvds;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t seed = TrialSeed(master_seed, c, t);
      try {
        SceneConfig scene = grid[c];
        scene.seed = seed;
        const SyntheticPair pair = Generate(scene);
        RansacConfig cfg = ransac;
        cfg.seed = seed;
        const RectificationResult r =
            Estimate(pair.matches, scene.intrinsics.size(), cfg);
        vaes.push_back(r.vae);
        nvds.push_back(0.5 * (r.nvd_left + r.nvd_right));
        ++row.succeeded;
      } catch (const Error& e) {
        if (!row.error) row.error = "trial " + std::to_string(t) + ": " + e.what();
      }
    }
    row.vae = Summarize(std::move(vaes));
    row.nvd = Summarize(std::move(nvds));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string SweepCsvHeader() {
  return "depth_min,depth_max,roll_deg,pitch_deg,noise_px,trials,succeeded,"
         "vae_mean,vae_median,vae_min,vae_max,"
         "nvd_mean,nvd_median,nvd_min,nvd_max,status";
}

std::string SweepCsvRow(const SweepRow& row) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%.9g,%.9g,%.9g,%.9g,%.9g,%zu,%zu,%.9g,%.9g,%.9g,%.9g,"
                "%.9g,%.9g,%.9g,%.9g,%s",
                row.cell.depth_min, row.cell.depth_max, row.cell.roll_deg,
                row.cell.pitch_deg, row.cell.noise_px, row.trials, row.succeeded,
                row.vae.mean, row.vae.median, row.vae.min, row.vae.max,
                row.nvd.mean, row.nvd.median, row.nvd.min, row.nvd.max,
                row.failed() ? "failed" : "ok");
  return buf;
}

}  // namespace rotrect
