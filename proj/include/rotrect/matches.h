#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace rotrect {

// Image dimensions in pixels.
struct ImageSize {
  int width = 0;
  int height = 0;

  bool operator==(const ImageSize&) const = default;
};

// Pixel coordinate frames. All solver math runs in the centered frame, whose
// origin sits at the principal point ((W-1)/2, (H-1)/2 in top-left pixels).
enum class PixelFrame { kCentered, kTopLeft };

std::string_view ToString(PixelFrame frame);

struct Point2 {
  Eigen::Vector2d xy = Eigen::Vector2d::Zero();
  PixelFrame frame = PixelFrame::kCentered;

  double x() const { return xy.x(); }
  double y() const { return xy.y(); }
};

// Offset that takes centered coordinates to top-left coordinates.
Eigen::Vector2d CenterOffset(const ImageSize& size);

Point2 ToCentered(const Point2& point, const ImageSize& size);
Point2 ToTopLeft(const Point2& point, const ImageSize& size);

// One correspondence p^1 <-> p^2, left (master) and right (slave) image.
struct Match {
  Eigen::Vector2d left = Eigen::Vector2d::Zero();
  Eigen::Vector2d right = Eigen::Vector2d::Zero();
};

// A set of correspondences that all live in one declared pixel frame.
class MatchSet {
 public:
  explicit MatchSet(PixelFrame frame = PixelFrame::kCentered) : frame_(frame) {}
  MatchSet(PixelFrame frame, std::vector<Match> matches)
      : frame_(frame), matches_(std::move(matches)) {}

  PixelFrame frame() const { return frame_; }
  std::size_t size() const { return matches_.size(); }
  bool empty() const { return matches_.empty(); }

  const Match& operator[](std::size_t i) const { return matches_[i]; }
  Match& operator[](std::size_t i) { return matches_[i]; }

  const std::vector<Match>& matches() const { return matches_; }
  auto begin() const { return matches_.begin(); }
  auto end() const { return matches_.end(); }

  void Add(const Match& match) { matches_.push_back(match); }
  // Throws FrameMismatch unless both points carry this set's frame.
  void Add(const Point2& left, const Point2& right);

  // Throws FrameMismatch if the set is not in `expected`.
  void RequireFrame(PixelFrame expected) const;

  MatchSet ToCentered(const ImageSize& size) const;
  MatchSet ToTopLeft(const ImageSize& size) const;

 private:
  PixelFrame frame_;
  std::vector<Match> matches_;
};

}  // namespace rotrect
