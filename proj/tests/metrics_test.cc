#include "rotrect/metrics.h"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rotrect/error.h"

namespace rotrect {
namespace {

MatchSet RandomSet(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> c(-400, 400);
  MatchSet set;
  for (int i = 0; i < n; ++i) set.Add({{c(rng), c(rng)}, {c(rng), c(rng)}});
  return set;
}

std::vector<std::array<double, 4>> Rows(const MatchSet& set) {
  std::vector<std::array<double, 4>> rows;
  for (const Match& m : set) rows.push_back({m.left.x(), m.left.y(), m.right.x(), m.right.y()});
  return rows;
}

TEST(Vae, Example) {
  MatchSet set;
  set.Add({{0, 3}, {9, 1}});
  set.Add({{4, 7}, {-2, 5}});
  EXPECT_EQ(Vae(set), 2.0);
}

TEST(Vae, AlignedIsZero) {
  MatchSet set;
  set.Add({{0, 3}, {9, 3}});
  set.Add({{4, -7.25}, {-2, -7.25}});
  EXPECT_EQ(Vae(set), 0.0);
}

TEST(Vae, EmptyThrows) { EXPECT_THROW(Vae(MatchSet{}), EmptySet); }

TEST(Vae, MatchesResummation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const MatchSet set = RandomSet(rng, 1 + trial * 20);
    EXPECT_NEAR(Vae(set), oracle::Vae(Rows(set)), 1e-12);
  }
}

TEST(Vae, InvariantUnderCommonXOnlyMaps) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-2, 2);
  const MatchSet set = RandomSet(rng, 300);
  for (int trial = 0; trial < 20; ++trial) {
    // x' = a x + b y + c, y' = y
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 0) = 1 + 0.5 * u(rng);
    m(0, 1) = u(rng);
    m(0, 2) = 50 * u(rng);
    const Homography h(m);
    MatchSet mapped;
    for (const Match& k : set) mapped.Add({h.Map(k.left), h.Map(k.right)});
    EXPECT_NEAR(Vae(mapped), Vae(set), 1e-12);
  }
}

TEST(Vae, PermutationInvariant) {
  std::mt19937_64 rng(43);
  const MatchSet set = RandomSet(rng, 200);
  std::vector<Match> shuffled = set.matches();
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_NEAR(Vae(MatchSet(PixelFrame::kCentered, shuffled)), Vae(set), 1e-12);
}

TEST(Nvd, IdentityIsZero) {
  EXPECT_EQ(Nvd(Homography(), {640, 480}), 0.0);
  EXPECT_EQ(Nvd(Homography(), {33, 7}), 0.0);
}

TEST(Nvd, Translation) {
  EXPECT_DOUBLE_EQ(Nvd(Homography::Translation(3, 4), {640, 480}), 0.025);
}

TEST(Nvd, MatchesCornerOracle) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 0) += 0.2 * u(rng);
    m(0, 1) = 0.1 * u(rng);
    m(0, 2) = 30 * u(rng);
    m(1, 0) = 0.1 * u(rng);
    m(1, 1) += 0.2 * u(rng);
    m(1, 2) = 30 * u(rng);
    m(2, 0) = 2e-4 * u(rng);
    m(2, 1) = 2e-4 * u(rng);
    oracle::Mat3 om{};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k) om[r][k] = m(r, k);
    EXPECT_NEAR(Nvd(Homography(m), {960, 720}), oracle::Nvd(om, 960, 720), 1e-12);
  }
}

// In the centered frame a uniform magnification about the image center still
// moves the top-left corners; NVD scales linearly with the translation part.
TEST(Nvd, LinearInTranslation) {
  const ImageSize size{640, 480};
  const double base = Nvd(Homography::Translation(2, -1), size);
  for (const double k : {0.5, 3.0, 10.0}) {
    EXPECT_NEAR(Nvd(Homography::Translation(2 * k, -k), size), k * base, 1e-12);
  }
}

TEST(Nvd, CornerAtInfinity) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(2, 0) = 1.0 / 319.5;  // sends the left border (x = -319.5) to infinity
  EXPECT_THROW(Nvd(Homography(m), {640, 480}), MapsToInfinity);
}

TEST(Evaluate, ReportsAllMetrics) {
  MatchSet set;
  set.Add({{0, 3}, {9, 1}});
  set.Add({{4, 7}, {-2, 5}});
  const HomographyPair pair{Homography::Translation(3, 4), Homography()};
  const MetricReport r = Evaluate(pair, set, {640, 480});
  // The left image moves down 4 px, so residuals become 6 and 6.
  EXPECT_DOUBLE_EQ(r.vae, 6.0);
  EXPECT_DOUBLE_EQ(r.nvd_left, 0.025);
  EXPECT_EQ(r.nvd_right, 0.0);
  EXPECT_DOUBLE_EQ(r.nvd_mean(), 0.0125);
  EXPECT_EQ(r.n_points, 2u);
}

}  // namespace
}  // namespace rotrect
