#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotrect {

// Base class of every error raised by the library. Each failure mode named by
// the public API has its own subclass so callers can dispatch on it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FrameMismatch : public Error {
 public:
  using Error::Error;
};

class PointBehindCamera : public Error {
 public:
  using Error::Error;
};

class SingularHomography : public Error {
 public:
  using Error::Error;
};

class MapsToInfinity : public Error {
 public:
  explicit MapsToInfinity(std::size_t index)
      : Error("point " + std::to_string(index) + " maps to infinity"),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class DegenerateSample : public Error {
 public:
  using Error::Error;
};

class ExcessivePerspective : public Error {
 public:
  using Error::Error;
};

class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

class NotEnoughMatches : public Error {
 public:
  using Error::Error;
};

class AllSamplesDegenerate : public Error {
 public:
  using Error::Error;
};

class EmptySet : public Error {
 public:
  using Error::Error;
};

class UnrealizableScene : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotrect
