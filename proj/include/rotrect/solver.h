#pragma once

#include <optional>

#include <Eigen/Dense>

#include "rotrect/homography.h"
#include "rotrect/matches.h"

namespace rotrect {

// Rectification by two homographies H^j = Hs^j * Hy^j, where
//
//   Hy^1 = [ 1    0   0  ]     Hy^2 = [  1    0   0  ]
//          [ h21 h22 h23 ]            [ -h21 h22 h23 ]
//          [ h31  0  h33 ]            [ -h31  0  h33 ]
//
// aligns rows and Hs^j = [[Sa, +-Sb, 0], [0, 1, 0], [0, 0, 1]] only shears x
// to limit distortion. Everything here works in the centered pixel frame and
// never needs the focal length.

enum class Side { kLeft, kRight };

// Selection rule for the free vertical scale h22.
//   kPaper:    h22 = sqrt((4 - W^2 t1^2) / 2), left + right edge deviation 2H.
//   kUnitMean: h22 = sqrt(4 - W^2 t1^2) / 2, mean edge height stays H.
enum class H22Mode { kPaper, kUnitMean };

struct HyParams {
  double h21 = 0.0;
  double h22 = 1.0;
  double h23 = 0.0;
  double h31 = 0.0;
  double h33 = 1.0;

  Eigen::Matrix3d Matrix() const;
};

struct HyPair {
  HyParams left;
  HyParams right;
};

struct ShearParams {
  double sa = 1.0;
  double sb = 0.0;
};

struct ShearPair {
  ShearParams left;
  ShearParams right;
};

// Solution t = A^-1 b of the two-point system. `conditioning` is the 2-norm
// condition number of A after scaling pixel coordinates by W/2.
struct SolverSolution {
  double t1 = 0.0;
  double t2 = 0.0;
  double conditioning = 1.0;
};

// |det A| must exceed this fraction of ||A||_inf^2.
inline constexpr double kDegenerateDetRatio = 1e-9;

// Solves
//   -(x2 y1 + x1 y2) t1 + (x1 + x2) t2 = y2 - y1
// for both correspondences (superscript 1/2 is left/right image), which is the
// row-equality condition of the Hy pair under h22 * h33 = 1 with
// t1 = h22 h31 and t2 = h21 h33 - h23 h31.
// Throws DegenerateSample when A is numerically singular.
SolverSolution SolveTwoPoint(const Match& first, const Match& second,
                             const ImageSize& size);
std::optional<SolverSolution> TrySolveTwoPoint(const Match& first,
                                               const Match& second,
                                               const ImageSize& size);

// Throws ExcessivePerspective when |t1| >= 2/W.
double PickH22(double t1, int width, H22Mode mode);
std::optional<double> TryPickH22(double t1, int width, H22Mode mode);

struct EdgeLengths {
  double left = 0.0;
  double right = 0.0;
};

// Height deviation of the left and right image borders after Hy:
//   l_left  = 2 H h22^2 / (2 - t1 W) - H
//   l_right = 2 H h22^2 / (2 + t1 W) - H
EdgeLengths ComputeEdgeLengths(double t1, double h22, const ImageSize& size);

// h31 = t1/h22, h33 = 1/h22, h21 = t1 h23 + t2 h22; the right side negates
// h21 and h31.
HyPair BuildHyPair(const SolverSolution& solution, double h22, double h23);

// Shear (Loop-Zhang) that keeps the Hy images of the edge-midpoint vectors
// perpendicular with aspect ratio W/H, returned for Hs = [[Sa, Sb, 0], ...]
// with Sa > 0. Throws DegenerateFrame when the midpoint vectors are collinear
// and MapsToInfinity when a midpoint leaves the plane.
ShearParams ComputeShear(const HyParams& hy, const ImageSize& size);
// Both shears. The right one is expressed in the mirrored parametrization
// used by Compose (Sb negated), so a symmetric Hy pair yields equal sides.
ShearPair ComputeShearPair(const HyPair& hy, const ImageSize& size);

// Hs * Hy, with Sb negated in Hs for the right image.
Homography Compose(const ShearParams& shear, const HyParams& hy, Side side);

// Edge midpoints (top, right, bottom, left) of a W x H frame in the centered
// frame.
struct FrameMidpoints {
  Eigen::Vector2d top, right, bottom, left;
};
FrameMidpoints CenteredMidpoints(const ImageSize& size);

}  // namespace rotrect
