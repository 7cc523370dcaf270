#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rotrect/matches.h"

namespace rotrect {

struct BenchReport {
  std::size_t repeat = 0;
  ImageSize size;
  double median_ms = 0.0;
  double mean_ms = 0.0;
  double p99_ms = 0.0;
  // FNV-1a digest of the sampled input coordinates; equal seeds give equal
  // digests.
  std::uint64_t input_digest = 0;
  std::size_t degenerate = 0;
};

// Wall time of RectifyFromSample on `repeat` correspondence pairs drawn from
// a noisy 960x720 synthetic scene. Scene generation and sampling are not
// timed.
BenchReport BenchmarkSolverChain(std::size_t repeat, std::uint64_t seed);

std::string BenchCsvHeader();
std::string BenchCsvRow(const BenchReport& report);

}  // namespace rotrect
