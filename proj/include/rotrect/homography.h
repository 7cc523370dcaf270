#pragma once

#include <optional>

#include <Eigen/Dense>

#include "rotrect/matches.h"

namespace rotrect {

// Invertible 3x3 projective map of the image plane.
//
// The matrix is kept exactly as constructed (no rescaling); Normalized()
// gives the serialization form with a unit bottom-right entry.
class Homography {
 public:
  // Identity.
  Homography() : matrix_(Eigen::Matrix3d::Identity()) {}
  // Throws SingularHomography if the normalized determinant is below 1e-12
  // or an entry is not finite.
  explicit Homography(const Eigen::Matrix3d& matrix);

  static Homography Translation(double dx, double dy);

  const Eigen::Matrix3d& matrix() const { return matrix_; }

  // Scaled so that the (3,3) entry is 1 when it is nonzero, else so that the
  // largest magnitude entry is 1.
  Eigen::Matrix3d Normalized() const;

  Homography Inverse() const;

  // Dehomogenized image of `p`; nullopt when |w| <= 1e-12.
  std::optional<Eigen::Vector2d> TryMap(const Eigen::Vector2d& p) const;
  // Throws MapsToInfinity (index 0) when TryMap fails.
  Eigen::Vector2d Map(const Eigen::Vector2d& p) const;

  friend Homography operator*(const Homography& a, const Homography& b) {
    return Homography(a.matrix_ * b.matrix_);
  }

 private:
  Eigen::Matrix3d matrix_;
};

// Rectifying homographies for the left (master) and right (slave) image.
struct HomographyPair {
  Homography left;
  Homography right;
};

// The same projective map expressed for top-left pixel coordinates, i.e.
// conjugation by the translation that moves the origin to the image corner.
Homography CenteredToTopLeft(const Homography& h, const ImageSize& size);
Homography TopLeftToCentered(const Homography& h, const ImageSize& size);

}  // namespace rotrect
