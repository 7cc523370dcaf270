#include "rotrect/matches.h"

#include <string>

#include "rotrect/error.h"

namespace rotrect {

std::string_view ToString(PixelFrame frame) {
  switch (frame) {
    case PixelFrame::kCentered:
      return "centered";
    case PixelFrame::kTopLeft:
      return "top-left";
  }
  return "unknown";
}

Eigen::Vector2d CenterOffset(const ImageSize& size) {
  return {0.5 * (size.width - 1), 0.5 * (size.height - 1)};
}

Point2 ToCentered(const Point2& point, const ImageSize& size) {
  if (point.frame == PixelFrame::kCentered) return point;
  return {point.xy - CenterOffset(size), PixelFrame::kCentered};
}

Point2 ToTopLeft(const Point2& point, const ImageSize& size) {
  if (point.frame == PixelFrame::kTopLeft) return point;
  return {point.xy + CenterOffset(size), PixelFrame::kTopLeft};
}

void MatchSet::Add(const Point2& left, const Point2& right) {
  if (left.frame != frame_ || right.frame != frame_) {
    throw FrameMismatch("match in " + std::string(ToString(left.frame)) + "/" +
                        std::string(ToString(right.frame)) +
                        " frame added to a " + std::string(ToString(frame_)) +
                        " match set");
  }
  matches_.push_back({left.xy, right.xy});
}

void MatchSet::RequireFrame(PixelFrame expected) const {
  if (frame_ != expected) {
    throw FrameMismatch("expected matches in " +
                        std::string(ToString(expected)) + " frame, got " +
                        std::string(ToString(frame_)));
  }
}

MatchSet MatchSet::ToCentered(const ImageSize& size) const {
  if (frame_ == PixelFrame::kCentered) return *this;
  const Eigen::Vector2d c = CenterOffset(size);
  MatchSet out(PixelFrame::kCentered);
  out.matches_.reserve(matches_.size());
  for (const Match& m : matches_) out.matches_.push_back({m.left - c, m.right - c});
  return out;
}

MatchSet MatchSet::ToTopLeft(const ImageSize& size) const {
  if (frame_ == PixelFrame::kTopLeft) return *this;
  const Eigen::Vector2d c = CenterOffset(size);
  MatchSet out(PixelFrame::kTopLeft);
  out.matches_.reserve(matches_.size());
  for (const Match& m : matches_) out.matches_.push_back({m.left + c, m.right + c});
  return out;
}

}  // namespace rotrect
