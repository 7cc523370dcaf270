#include "rotrect/pipeline.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rotrect/error.h"
#include "rotrect/metrics.h"
#include "rotrect/synth.h"

namespace rotrect {
namespace {

SceneConfig Scene(std::uint64_t seed) {
  SceneConfig cfg;
  cfg.n_points = 50;
  cfg.roll_deg = 20;
  cfg.pitch_deg = 30;
  cfg.depth_min = 2;
  cfg.depth_max = 20;
  cfg.seed = seed;
  return cfg;
}

TEST(Estimate, NoiselessSceneIsRealizable) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SceneConfig cfg = Scene(seed);
    const SyntheticPair pair = Generate(cfg);
    RansacConfig rc;
    rc.iterations = 200;
    rc.seed = seed;
    const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), rc);
    EXPECT_LT(r.vae, 1e-6);
    // The composed pair aligns every match, not just the sample.
    const MatchSet rect = ApplyToMatches(r.homographies, pair.matches);
    for (const Match& m : rect) EXPECT_NEAR(m.left.y(), m.right.y(), 1e-6);
  }
}

TEST(Estimate, AlreadyAlignedInput) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> x(-400, 400), y(-300, 300);
  MatchSet set;
  for (int i = 0; i < 30; ++i) {
    const double row = y(rng);
    set.Add({{x(rng), row}, {x(rng), row}});
  }
  const RectificationResult r = Estimate(set, {960, 720}, {});
  EXPECT_EQ(r.vae, 0.0);
  EXPECT_EQ(r.solution.t1, 0.0);
  EXPECT_EQ(r.solution.t2, 0.0);
  EXPECT_EQ(r.iterations_used, 1);
}

TEST(Estimate, RejectsTooFewMatches) {
  MatchSet one;
  one.Add({{0, 0}, {1, 1}});
  EXPECT_THROW(Estimate(one, {960, 720}, {}), NotEnoughMatches);
  MatchSet three;
  for (int i = 0; i < 3; ++i) three.Add({{double(i), 0}, {double(i), 1}});
  RansacConfig rc;
  rc.min_matches = 4;
  EXPECT_THROW(Estimate(three, {960, 720}, rc), NotEnoughMatches);
}

TEST(Estimate, RejectsTopLeftFrame) {
  MatchSet set(PixelFrame::kTopLeft, {{{0, 0}, {1, 1}}, {{5, 5}, {6, 7}}});
  EXPECT_THROW(Estimate(set, {960, 720}, {}), FrameMismatch);
}

TEST(Estimate, AllSamplesDegenerate) {
  MatchSet set;
  for (int i = 0; i < 5; ++i) set.Add({{10, 5}, {12, 7}});
  RansacConfig rc;
  rc.iterations = 20;
  EXPECT_THROW(Estimate(set, {960, 720}, rc), AllSamplesDegenerate);
}

TEST(RansacConfig, Validation) {
  RansacConfig rc;
  rc.iterations = 0;
  EXPECT_THROW(rc.Validate(), InvalidArgument);
  rc = {};
  rc.early_exit_vae = -1;
  EXPECT_THROW(rc.Validate(), InvalidArgument);
  rc = {};
  rc.min_matches = 1;
  EXPECT_THROW(rc.Validate(), InvalidArgument);
}

TEST(Estimate, Deterministic) {
  SceneConfig cfg = Scene(3);
  cfg.noise_px = 1.0;
  const SyntheticPair pair = Generate(cfg);
  RansacConfig rc;
  rc.seed = 99;
  rc.early_exit_vae = 0;
  const RectificationResult a = Estimate(pair.matches, cfg.intrinsics.size(), rc);
  const RectificationResult b = Estimate(pair.matches, cfg.intrinsics.size(), rc);
  EXPECT_EQ(a.homographies.left.matrix(), b.homographies.left.matrix());
  EXPECT_EQ(a.homographies.right.matrix(), b.homographies.right.matrix());
  EXPECT_EQ(a.vae, b.vae);
  EXPECT_EQ(a.sample_indices, b.sample_indices);
  EXPECT_EQ(a.best_vae_trace, b.best_vae_trace);
}

TEST(Estimate, BestTraceIsNonIncreasing) {
  SceneConfig cfg = Scene(4);
  cfg.noise_px = 2.0;
  cfg.outlier_fraction = 0.2;
  const SyntheticPair pair = Generate(cfg);
  RansacConfig rc;
  rc.early_exit_vae = 0;
  rc.iterations = 500;
  const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), rc);
  ASSERT_EQ(r.best_vae_trace.size(), 500u);
  for (std::size_t i = 1; i < r.best_vae_trace.size(); ++i) {
    EXPECT_LE(r.best_vae_trace[i], r.best_vae_trace[i - 1]);
  }
  EXPECT_EQ(r.best_vae_trace.back(), r.vae);
}

TEST(Estimate, EarlyExitStopsLoop) {
  const SceneConfig cfg = Scene(5);
  const SyntheticPair pair = Generate(cfg);
  RansacConfig rc;
  rc.iterations = 1000;
  const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), rc);
  EXPECT_LT(r.iterations_used, 1000);
  EXPECT_EQ(r.best_vae_trace.size(), static_cast<std::size_t>(r.iterations_used));
}

// The returned score is the VAE of the Hy pair; shearing x leaves it alone.
TEST(Estimate, ScoreConsistency) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SceneConfig cfg = Scene(seed);
    cfg.noise_px = 1.5;
    const SyntheticPair pair = Generate(cfg);
    RansacConfig rc;
    rc.seed = seed;
    const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), rc);
    const HomographyPair hy_only{Homography(r.hy.left.Matrix()),
                                 Homography(r.hy.right.Matrix())};
    const double hy_vae = Vae(ApplyToMatches(hy_only, pair.matches));
    const double full_vae = Vae(ApplyToMatches(r.homographies, pair.matches));
    EXPECT_NEAR(r.vae, hy_vae, 1e-12);
    EXPECT_NEAR(full_vae, hy_vae, 1e-12);
  }
}

TEST(Estimate, ReportsDistortion) {
  const SceneConfig cfg = Scene(6);
  const SyntheticPair pair = Generate(cfg);
  const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), {});
  EXPECT_NEAR(r.nvd_left, Nvd(r.homographies.left, cfg.intrinsics.size()), 1e-15);
  EXPECT_NEAR(r.nvd_right, Nvd(r.homographies.right, cfg.intrinsics.size()), 1e-15);
  EXPECT_GE(r.nvd_left, 0.0);
}

// With outliers the all-match score is finite for an all-inlier sample, which
// aligns the inliers exactly; the winner never scores worse than it.
TEST(Estimate, OutlierContaminatedScene) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SceneConfig cfg = Scene(seed + 100);
    cfg.n_points = 100;
    cfg.outlier_fraction = 0.3;
    const SyntheticPair pair = Generate(cfg);
    MatchSet inliers;
    std::vector<std::size_t> inlier_index;
    for (std::size_t i = 0; i < pair.matches.size(); ++i) {
      if (!pair.is_outlier[i]) {
        inliers.Add(pair.matches[i]);
        inlier_index.push_back(i);
      }
    }
    ASSERT_EQ(inliers.size(), 70u);
    const auto h = RectifyFromSample(pair.matches[inlier_index[0]],
                                     pair.matches[inlier_index[1]],
                                     cfg.intrinsics.size(), H22Mode::kPaper, 0.0);
    ASSERT_TRUE(h);
    EXPECT_LT(Vae(ApplyToMatches(*h, inliers)), 1e-9);

    RansacConfig rc;
    rc.seed = seed;
    const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), rc);
    EXPECT_LE(r.vae, Vae(ApplyToMatches(*h, pair.matches)));
  }
}

TEST(ApplyToMatches, IdentityPair) {
  MatchSet set;
  set.Add({{1.5, -2}, {3, 4}});
  const MatchSet out = ApplyToMatches({}, set);
  EXPECT_EQ(out[0].left, set[0].left);
  EXPECT_EQ(out[0].right, set[0].right);
  EXPECT_EQ(out.frame(), set.frame());
}

TEST(ApplyToMatches, LeftTranslation) {
  MatchSet set;
  set.Add({{1.5, -2}, {3, 4}});
  const MatchSet out = ApplyToMatches({Homography::Translation(0, 3), Homography()}, set);
  EXPECT_EQ(out[0].left, Eigen::Vector2d(1.5, 1));
  EXPECT_EQ(out[0].right, Eigen::Vector2d(3, 4));
}

TEST(ApplyToMatches, MatchesHomogeneousOracle) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-1, 1);
  MatchSet set;
  for (int i = 0; i < 50; ++i) set.Add({{300 * u(rng), 300 * u(rng)}, {300 * u(rng), 300 * u(rng)}});
  Eigen::Matrix3d a = Eigen::Matrix3d::Identity(), b = Eigen::Matrix3d::Identity();
  a(0, 1) = 0.1; a(1, 2) = 4; a(2, 0) = 3e-4;
  b(1, 0) = -0.05; b(0, 2) = -7; b(2, 1) = -2e-4;
  oracle::Mat3 oa{}, ob{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) { oa[r][c] = a(r, c); ob[r][c] = b(r, c); }
  const MatchSet out = ApplyToMatches({Homography(a), Homography(b)}, set);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto l = oracle::Apply(oa, set[i].left.x(), set[i].left.y());
    const auto r = oracle::Apply(ob, set[i].right.x(), set[i].right.y());
    EXPECT_NEAR(out[i].left.x(), l[0], 1e-9);
    EXPECT_NEAR(out[i].left.y(), l[1], 1e-9);
    EXPECT_NEAR(out[i].right.x(), r[0], 1e-9);
    EXPECT_NEAR(out[i].right.y(), r[1], 1e-9);
  }
}

TEST(ApplyToMatches, ReportsIndexAtInfinity) {
  MatchSet set;
  set.Add({{10, 0}, {0, 0}});
  set.Add({{-100, 0}, {0, 0}});
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(2, 0) = 0.01;
  try {
    ApplyToMatches({Homography(m), Homography()}, set);
    FAIL() << "expected MapsToInfinity";
  } catch (const MapsToInfinity& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(RectifyFromSample, MatchesEstimateChain) {
  const SceneConfig cfg = Scene(7);
  const SyntheticPair pair = Generate(cfg);
  RansacConfig rc;
  rc.iterations = 50;
  const RectificationResult r = Estimate(pair.matches, cfg.intrinsics.size(), rc);
  const auto [i, j] = r.sample_indices;
  const auto h = RectifyFromSample(pair.matches[i], pair.matches[j], cfg.intrinsics.size(),
                                   rc.h22_mode, rc.h23);
  ASSERT_TRUE(h);
  EXPECT_LT((h->left.matrix() - r.homographies.left.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((h->right.matrix() - r.homographies.right.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

}  // namespace
}  // namespace rotrect
