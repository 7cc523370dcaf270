#include "rotrect/solver.h"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "rotrect/error.h"

namespace rotrect {
namespace {

struct TwoPointSystem {
  Eigen::Matrix2d A;
  Eigen::Vector2d b;
};

TwoPointSystem BuildSystem(const Match& first, const Match& second) {
  TwoPointSystem s;
  int row = 0;
  for (const Match* m : {&first, &second}) {
    const double x1 = m->left.x(), y1 = m->left.y();
    const double x2 = m->right.x(), y2 = m->right.y();
    s.A(row, 0) = -(x2 * y1 + x1 * y2);
    s.A(row, 1) = x1 + x2;
    s.b(row) = y2 - y1;
    ++row;
  }
  return s;
}

bool IsDegenerate(const Eigen::Matrix2d& A) {
  const double norm_inf = A.cwiseAbs().rowwise().sum().maxCoeff();
  return !(std::abs(A.determinant()) > kDegenerateDetRatio * norm_inf * norm_inf);
}

}  // namespace

Eigen::Matrix3d HyParams::Matrix() const {
  Eigen::Matrix3d m;
  m << 1.0, 0.0, 0.0,
       h21, h22, h23,
       h31, 0.0, h33;
  return m;
}

std::optional<SolverSolution> TrySolveTwoPoint(const Match& first,
                                               const Match& second,
                                               const ImageSize& size) {
  const TwoPointSystem s = BuildSystem(first, second);
  if (IsDegenerate(s.A)) return std::nullopt;

  // Cramer's rule; A is 2x2.
  const double det = s.A.determinant();
  SolverSolution sol;
  sol.t1 = (s.b(0) * s.A(1, 1) - s.A(0, 1) * s.b(1)) / det;
  sol.t2 = (s.A(0, 0) * s.b(1) - s.b(0) * s.A(1, 0)) / det;
  if (!std::isfinite(sol.t1) || !std::isfinite(sol.t2)) return std::nullopt;

  const double scale = 2.0 / size.width;
  Eigen::Matrix2d scaled = s.A;
  scaled.col(0) *= scale * scale;
  scaled.col(1) *= scale;
  const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2d>(scaled).singularValues();
  sol.conditioning = sv(1) > 0.0 ? sv(0) / sv(1) : HUGE_VAL;
  return sol;
}

SolverSolution SolveTwoPoint(const Match& first, const Match& second,
                             const ImageSize& size) {
  if (auto sol = TrySolveTwoPoint(first, second, size)) return *sol;
  throw DegenerateSample("two-point system is singular");
}

std::optional<double> TryPickH22(double t1, int width, H22Mode mode) {
  const double wt = width * t1;
  const double radicand = 4.0 - wt * wt;
  if (!(radicand > 0.0)) return std::nullopt;
  switch (mode) {
    case H22Mode::kPaper:
      return std::sqrt(radicand / 2.0);
    case H22Mode::kUnitMean:
      return std::sqrt(radicand) / 2.0;
  }
  return std::nullopt;
}

double PickH22(double t1, int width, H22Mode mode) {
  if (auto h22 = TryPickH22(t1, width, mode)) return *h22;
  throw ExcessivePerspective("|t1| = " + std::to_string(std::abs(t1)) +
                             " is not below 2/W = " + std::to_string(2.0 / width));
}

EdgeLengths ComputeEdgeLengths(double t1, double h22, const ImageSize& size) {
  const double W = size.width, H = size.height;
  const double scaled = 2.0 * H * h22 * h22;
  return {scaled / (2.0 - t1 * W) - H, scaled / (2.0 + t1 * W) - H};
}

HyPair BuildHyPair(const SolverSolution& solution, double h22, double h23) {
  if (!(h22 > 0.0)) throw InvalidArgument("h22 must be positive");
  HyParams left;
  left.h22 = h22;
  left.h23 = h23;
  left.h31 = solution.t1 / h22;
  left.h33 = 1.0 / h22;
  left.h21 = solution.t1 * h23 + solution.t2 * h22;

  HyParams right = left;
  right.h21 = -left.h21;
  right.h31 = -left.h31;
  return {left, right};
}

FrameMidpoints CenteredMidpoints(const ImageSize& size) {
  const double hw = 0.5 * size.width, hh = 0.5 * size.height;
  return {{0.0, -hh}, {hw, 0.0}, {0.0, hh}, {-hw, 0.0}};
}

ShearParams ComputeShear(const HyParams& hy, const ImageSize& size) {
  const Homography h(hy.Matrix());
  const FrameMidpoints mid = CenteredMidpoints(size);
  const Eigen::Vector2d a = h.Map(mid.top);
  const Eigen::Vector2d b = h.Map(mid.right);
  const Eigen::Vector2d c = h.Map(mid.bottom);
  const Eigen::Vector2d d = h.Map(mid.left);
  const Eigen::Vector2d x = b - d;
  const Eigen::Vector2d y = c - a;

  const double W = size.width, H = size.height;
  const double cross = x.y() * y.x() - x.x() * y.y();
  if (!(std::abs(cross) > 1e-12 * x.norm() * y.norm())) {
    throw DegenerateFrame("edge-midpoint vectors are collinear after Hy");
  }
  ShearParams s;
  s.sa = (H * H * x.y() * x.y() + W * W * y.y() * y.y()) / (H * W * cross);
  s.sb = (H * H * x.x() * x.y() + W * W * y.x() * y.y()) / (-H * W * cross);
  if (s.sa < 0.0) {
    s.sa = -s.sa;
    s.sb = -s.sb;
  }
  return s;
}

ShearPair ComputeShearPair(const HyPair& hy, const ImageSize& size) {
  const ShearParams left = ComputeShear(hy.left, size);
  const ShearParams right = ComputeShear(hy.right, size);
  return {left, {right.sa, -right.sb}};
}

Homography Compose(const ShearParams& shear, const HyParams& hy, Side side) {
  Eigen::Matrix3d hs = Eigen::Matrix3d::Identity();
  hs(0, 0) = shear.sa;
  hs(0, 1) = side == Side::kLeft ? shear.sb : -shear.sb;
  return Homography(hs * hy.Matrix());
}

}  // namespace rotrect
