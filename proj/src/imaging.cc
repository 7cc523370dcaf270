#include "rotrect/imaging.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "rotrect/error.h"

namespace rotrect {

namespace {

std::size_t SampleCount(int width, int height) {
  if (width < 0 || height < 0) throw InvalidArgument("negative image size");
  return static_cast<std::size_t>(width) * height;
}

}  // namespace

GrayImage::GrayImage(int width, int height, float fill)
    : width_(width), height_(height), samples_(SampleCount(width, height), fill) {}

GrayImage::GrayImage(int width, int height, std::vector<float> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (samples_.size() != SampleCount(width, height)) {
    throw DimensionMismatch("sample count does not match " +
                            std::to_string(width) + "x" + std::to_string(height));
  }
}

GrayImage GrayImage::FromBytes(int width, int height,
                               const std::vector<std::uint8_t>& bytes) {
  return GrayImage(width, height, std::vector<float>(bytes.begin(), bytes.end()));
}

std::vector<std::uint8_t> GrayImage::ToBytes() const {
  std::vector<std::uint8_t> out(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    // std::round rounds half away from zero.
    const float v = std::round(samples_[i]);
    out[i] = static_cast<std::uint8_t>(std::clamp(v, 0.0f, 255.0f));
  }
  return out;
}

bool GrayImage::Interpolate(double x, double y, float* value) const {
  if (!(x >= 0.0 && y >= 0.0 && x <= width_ - 1 && y <= height_ - 1)) return false;
  const int x0 = static_cast<int>(x);
  const int y0 = static_cast<int>(y);
  const int x1 = std::min(x0 + 1, width_ - 1);
  const int y1 = std::min(y0 + 1, height_ - 1);
  const double fx = x - x0;
  const double fy = y - y0;
  const double top = (*this)(x0, y0) + fx * ((*this)(x1, y0) - (*this)(x0, y0));
  const double bottom = (*this)(x0, y1) + fx * ((*this)(x1, y1) - (*this)(x0, y1));
  *value = static_cast<float>(top + fy * (bottom - top));
  return true;
}

GrayImage Warp(const GrayImage& image, const Homography& h,
               const ImageSize& out_size, const Eigen::Vector2i& offset) {
  const Eigen::Matrix3d inv = h.Inverse().matrix();
  GrayImage out(out_size.width, out_size.height, 0.0f);
  for (int y = 0; y < out_size.height; ++y) {
    for (int x = 0; x < out_size.width; ++x) {
      const Eigen::Vector3d q(x - offset.x(), y - offset.y(), 1.0);
      const Eigen::Vector3d src = inv * q;
      if (!(std::abs(src.z()) > 1e-12)) continue;
      float v;
      if (image.Interpolate(src.x() / src.z(), src.y() / src.z(), &v)) out(x, y) = v;
    }
  }
  return out;
}

CanvasLayout CommonBounds(const Homography& left, const Homography& right,
                          const ImageSize& size) {
  const double w = size.width - 1.0, ht = size.height - 1.0;
  const std::array<Eigen::Vector2d, 4> corners = {
      Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(w, 0.0),
      Eigen::Vector2d(0.0, ht), Eigen::Vector2d(w, ht)};
  Eigen::Vector2d lo = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector2d hi = -lo;
  std::size_t index = 0;
  for (const Homography* h : {&left, &right}) {
    for (const Eigen::Vector2d& c : corners) {
      const auto p = h->TryMap(c);
      if (!p) throw MapsToInfinity(index);
      lo = lo.cwiseMin(*p);
      hi = hi.cwiseMax(*p);
      ++index;
    }
  }
  const Eigen::Vector2d min_px = lo.array().floor();
  const Eigen::Vector2d max_px = hi.array().ceil();
  const Eigen::Vector2d extent = max_px - min_px;
  if (!(extent.maxCoeff() < kMaxCanvasSide)) {
    throw InvalidArgument("rectified canvas would exceed " +
                          std::to_string(kMaxCanvasSide) + " pixels per side");
  }
  CanvasLayout layout;
  layout.size = {static_cast<int>(extent.x()) + 1, static_cast<int>(extent.y()) + 1};
  const Eigen::Vector2i offset(static_cast<int>(-min_px.x()),
                               static_cast<int>(-min_px.y()));
  layout.offset_left = offset;
  layout.offset_right = offset;
  return layout;
}

namespace {

// Winner-take-all disparity of each pixel of `ref` against `other`, searching
// other(x + sign * d, y). Entries where no candidate fits are invalid.
std::vector<float> WinnerTakeAll(const GrayImage& ref, const GrayImage& other,
                                 int radius, int max_disp, int sign) {
  const int w = ref.width(), h = ref.height();
  std::vector<float> disp(static_cast<std::size_t>(w) * h, kInvalidDisparity);
  for (int y = radius; y < h - radius; ++y) {
    for (int x = radius; x < w - radius; ++x) {
      double best = std::numeric_limits<double>::infinity();
      int best_d = -1;
      for (int d = 0; d <= max_disp; ++d) {
        const int xo = x + sign * d;
        if (xo - radius < 0 || xo + radius >= w) break;
        double sad = 0.0;
        for (int dy = -radius; dy <= radius; ++dy) {
          for (int dx = -radius; dx <= radius; ++dx) {
            sad += std::abs(ref(x + dx, y + dy) - other(xo + dx, y + dy));
          }
        }
        if (sad < best) {
          best = sad;
          best_d = d;
        }
      }
      if (best_d >= 0) disp[static_cast<std::size_t>(y) * w + x] = best_d;
    }
  }
  return disp;
}

}  // namespace

DisparityMap BlockDisparity(const GrayImage& left, const GrayImage& right,
                            int block, int max_disp) {
  if (left.size() != right.size()) {
    throw DimensionMismatch("stereo images differ in size");
  }
  if (block < 3 || block % 2 == 0) {
    throw InvalidArgument("block size must be odd and >= 3");
  }
  if (max_disp < 0) throw InvalidArgument("max disparity must be >= 0");

  const int radius = block / 2;
  const int w = left.width();
  DisparityMap map{w, left.height(),
                   WinnerTakeAll(left, right, radius, max_disp, -1)};
  const std::vector<float> from_right =
      WinnerTakeAll(right, left, radius, max_disp, +1);

  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < w; ++x) {
      float& d = map.values[static_cast<std::size_t>(y) * w + x];
      if (d == kInvalidDisparity) continue;
      const int xr = x - static_cast<int>(d);
      const float back = from_right[static_cast<std::size_t>(y) * w + xr];
      if (back == kInvalidDisparity || std::abs(back - d) > 1.0f) {
        d = kInvalidDisparity;
      }
    }
  }
  return map;
}

}  // namespace rotrect
