#include "rotrect/homography.h"

#include <cmath>

#include <Eigen/Geometry>
#include <Eigen/LU>

#include "rotrect/error.h"

namespace rotrect {
namespace {

constexpr double kMinDeterminant = 1e-12;
constexpr double kMinW = 1e-12;

Eigen::Matrix3d NormalizeScale(const Eigen::Matrix3d& m) {
  const double corner = m(2, 2);
  if (corner != 0.0) return m / corner;
  return m / m.cwiseAbs().maxCoeff();
}

}  // namespace

Homography::Homography(const Eigen::Matrix3d& matrix) : matrix_(matrix) {
  if (!matrix_.allFinite()) {
    throw SingularHomography("homography has non-finite entries");
  }
  if (matrix_.cwiseAbs().maxCoeff() == 0.0 ||
      std::abs(NormalizeScale(matrix_).determinant()) <= kMinDeterminant) {
    throw SingularHomography("homography is not invertible");
  }
}

Homography Homography::Translation(double dx, double dy) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 2) = dx;
  m(1, 2) = dy;
  return Homography(m);
}

Eigen::Matrix3d Homography::Normalized() const { return NormalizeScale(matrix_); }

Homography Homography::Inverse() const { return Homography(matrix_.inverse()); }

std::optional<Eigen::Vector2d> Homography::TryMap(const Eigen::Vector2d& p) const {
  const Eigen::Vector3d q = matrix_ * p.homogeneous();
  if (!(std::abs(q.z()) > kMinW)) return std::nullopt;
  return q.hnormalized();
}

Eigen::Vector2d Homography::Map(const Eigen::Vector2d& p) const {
  if (auto q = TryMap(p)) return *q;
  throw MapsToInfinity(0);
}

Homography CenteredToTopLeft(const Homography& h, const ImageSize& size) {
  const Eigen::Vector2d c = CenterOffset(size);
  return Homography::Translation(c.x(), c.y()) * h *
         Homography::Translation(-c.x(), -c.y());
}

Homography TopLeftToCentered(const Homography& h, const ImageSize& size) {
  const Eigen::Vector2d c = CenterOffset(size);
  return Homography::Translation(-c.x(), -c.y()) * h *
         Homography::Translation(c.x(), c.y());
}

}  // namespace rotrect
