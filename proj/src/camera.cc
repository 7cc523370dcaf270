#include "rotrect/camera.h"

#include <cmath>
#include <numbers>

#include "rotrect/error.h"

namespace rotrect {

void CameraIntrinsics::Validate() const {
  if (!(fx > 0.0) || !(fy > 0.0) || !std::isfinite(fx) || !std::isfinite(fy)) {
    throw InvalidArgument("focal lengths must be positive and finite");
  }
  if (width < 2 || height < 2) {
    throw InvalidArgument("image must be at least 2x2 pixels");
  }
}

Eigen::Matrix3d CameraIntrinsics::K() const {
  return Eigen::Vector3d(fx, fy, 1.0).asDiagonal();
}

Eigen::Matrix3d CameraIntrinsics::KInverse() const {
  return Eigen::Vector3d(1.0 / fx, 1.0 / fy, 1.0).asDiagonal();
}

void LatitudinalPose::Validate() const {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  if (!std::isfinite(alpha) || !std::isfinite(beta) ||
      std::abs(alpha) >= kHalfPi || std::abs(beta) >= kHalfPi) {
    throw InvalidArgument("latitudinal angles must satisfy |angle| < pi/2");
  }
}

Eigen::Matrix3d EulerRotation(double yaw, double pitch, double roll) {
  const double cz = std::cos(yaw), sz = std::sin(yaw);
  const double cy = std::cos(pitch), sy = std::sin(pitch);
  const double cx = std::cos(roll), sx = std::sin(roll);
  Eigen::Matrix3d rz, ry, rx;
  rz << cz, -sz, 0, sz, cz, 0, 0, 0, 1;
  ry << cy, 0, sy, 0, 1, 0, -sy, 0, cy;
  rx << 1, 0, 0, 0, cx, -sx, 0, sx, cx;
  return rz * ry * rx;
}

std::pair<Pose, Pose> LatitudinalPosePair(const LatitudinalPose& angles) {
  angles.Validate();
  const Eigen::Vector3d z(0.0, 0.0, -1.0);
  return {Pose{EulerRotation(angles.alpha, -angles.beta, 0.0), z},
          Pose{EulerRotation(-angles.alpha, angles.beta, 0.0), z}};
}

Point2 Project(const Eigen::Vector3d& point, const Pose& pose,
               const CameraIntrinsics& intrinsics) {
  const Eigen::Vector3d cam = pose.R * point + pose.t;
  if (!(cam.z() > 0.0)) {
    throw PointBehindCamera("point has non-positive depth " +
                            std::to_string(cam.z()));
  }
  const Eigen::Vector3d p = intrinsics.K() * cam;
  return {p.hnormalized(), PixelFrame::kCentered};
}

HomographyPair CalibratedRectifyingPair(const LatitudinalPose& angles,
                                        const CameraIntrinsics& intrinsics) {
  intrinsics.Validate();
  const auto [left, right] = LatitudinalPosePair(angles);
  const Eigen::Matrix3d K = intrinsics.K();
  const Eigen::Matrix3d K_inv = intrinsics.KInverse();
  // Rotations are orthonormal, so the inverse is the transpose.
  return {Homography(K * left.R.transpose() * K_inv),
          Homography(K * right.R.transpose() * K_inv)};
}

HomographyPair ClosedFormRectifyingPair(const LatitudinalPose& angles,
                                        const CameraIntrinsics& intrinsics) {
  intrinsics.Validate();
  angles.Validate();
  const double ca = std::cos(angles.alpha), sa = std::sin(angles.alpha);
  const double cb = std::cos(angles.beta), sb = std::sin(angles.beta);
  const double fx = intrinsics.fx, fy = intrinsics.fy;

  // The right matrix is the left one with (alpha, beta) -> (-alpha, -beta).
  auto closed_form = [&](double s_a, double s_b) {
    Eigen::Matrix3d h;
    h << cb * ca, fx * s_a * cb / fy, fx * s_b,
         -fy * s_a / fx, ca, 0.0,
         -ca * s_b / fx, -s_a * s_b / fy, cb;
    return Homography(h);
  };
  return {closed_form(sa, sb), closed_form(-sa, -sb)};
}

}  // namespace rotrect
