#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rotrect/homography.h"
#include "rotrect/matches.h"

namespace rotrect {

// Single-channel image, row-major float samples. 8-bit images are promoted
// on load and re-quantized (round half away from zero, clamped) on output.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, float fill = 0.0f);
  GrayImage(int width, int height, std::vector<float> samples);

  static GrayImage FromBytes(int width, int height,
                             const std::vector<std::uint8_t>& bytes);
  std::vector<std::uint8_t> ToBytes() const;

  int width() const { return width_; }
  int height() const { return height_; }
  ImageSize size() const { return {width_, height_}; }
  bool empty() const { return samples_.empty(); }

  float operator()(int x, int y) const { return samples_[Index(x, y)]; }
  float& operator()(int x, int y) { return samples_[Index(x, y)]; }

  const std::vector<float>& samples() const { return samples_; }

  // Bilinear sample at a top-left pixel position; false outside
  // [0, W-1] x [0, H-1].
  bool Interpolate(double x, double y, float* value) const;

 private:
  std::size_t Index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<float> samples_;
};

// Inverse-mapping warp in top-left pixels: output pixel q samples `image` at
// H^-1 (q - offset) bilinearly; pixels that fall outside the source are 0.
GrayImage Warp(const GrayImage& image, const Homography& h,
               const ImageSize& out_size, const Eigen::Vector2i& offset);

struct CanvasLayout {
  ImageSize size;
  Eigen::Vector2i offset_left = Eigen::Vector2i::Zero();
  Eigen::Vector2i offset_right = Eigen::Vector2i::Zero();
};

// Smallest integer canvas holding both warped image quadrilaterals
// (top-left-frame homographies). The two offsets share their y component so
// rectified rows stay aligned. Throws MapsToInfinity if a corner does and
// InvalidArgument if the canvas would exceed kMaxCanvasSide per side.
inline constexpr int kMaxCanvasSide = 16384;
CanvasLayout CommonBounds(const Homography& left, const Homography& right,
                          const ImageSize& size);

// Disparity per left-image pixel; kInvalidDisparity where unmatched.
inline constexpr float kInvalidDisparity = -1.0f;

struct DisparityMap {
  int width = 0;
  int height = 0;
  std::vector<float> values;

  float at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  bool valid(int x, int y) const { return at(x, y) != kInvalidDisparity; }
};

// SAD block matching along rows of a rectified pair: left pixel x matches
// right pixel x - d, d in [0, max_disp], the smallest d winning ties. Pixels
// whose block leaves the image, or that fail a 1 px left-right consistency
// check, are invalid. Throws DimensionMismatch or InvalidArgument (block must
// be odd and >= 3, max_disp >= 0).
DisparityMap BlockDisparity(const GrayImage& left, const GrayImage& right,
                            int block, int max_disp);

}  // namespace rotrect
