#pragma once

#include <utility>

#include <Eigen/Dense>

#include "rotrect/homography.h"
#include "rotrect/matches.h"

namespace rotrect {

// Pinhole intrinsics K = diag(fx, fy, 1) in the centered frame: the principal
// point is the image center.
struct CameraIntrinsics {
  double fx = 1.0;
  double fy = 1.0;
  int width = 2;
  int height = 2;

  // Throws InvalidArgument unless fx, fy > 0 and width, height >= 2.
  void Validate() const;

  ImageSize size() const { return {width, height}; }
  Eigen::Matrix3d K() const;
  Eigen::Matrix3d KInverse() const;
};

// Motion angles of a latitudinal camera pair: alpha rotates about the optical
// axis, beta about the vertical axis. Both views face the scene, so
// |alpha|, |beta| < pi/2.
struct LatitudinalPose {
  double alpha = 0.0;
  double beta = 0.0;

  void Validate() const;
};

// World-to-camera rigid transform: X_cam = R * X_world + t.
struct Pose {
  Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t = Eigen::Vector3d::Zero();

  Eigen::Vector3d Center() const { return -R.transpose() * t; }
};

// R_z(yaw) * R_y(pitch) * R_x(roll).
Eigen::Matrix3d EulerRotation(double yaw, double pitch, double roll);

// Camera poses of the latitudinal model on the unit sphere:
//   left  = (R(alpha, -beta, 0), [0, 0, -1])
//   right = (R(-alpha, beta, 0), [0, 0, -1])
// The camera centers are (+-sin(beta), 0, cos(beta)), so the two rotated-back
// views form a laterally displaced stereo pair.
std::pair<Pose, Pose> LatitudinalPosePair(const LatitudinalPose& angles);

// Pinhole projection into the centered frame. Throws PointBehindCamera when
// the camera-frame depth is not positive.
Point2 Project(const Eigen::Vector3d& point, const Pose& pose,
               const CameraIntrinsics& intrinsics);

// H^j = K (R^j)^-1 K^-1 for the two latitudinal poses. Applying the pair to
// noiseless projections of any scene point yields equal y coordinates.
HomographyPair CalibratedRectifyingPair(const LatitudinalPose& angles,
                                        const CameraIntrinsics& intrinsics);

// Entry-by-entry closed form of CalibratedRectifyingPair.
HomographyPair ClosedFormRectifyingPair(const LatitudinalPose& angles,
                                        const CameraIntrinsics& intrinsics);

}  // namespace rotrect
