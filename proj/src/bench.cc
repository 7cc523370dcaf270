#include "rotrect/bench.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "rotrect/error.h"
#include "rotrect/pipeline.h"
#include "rotrect/synth.h"

namespace rotrect {
namespace {

void Fnv1a(std::uint64_t& h, double value) {
  unsigned char bytes[sizeof(double)];
  std::memcpy(bytes, &value, sizeof(double));
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

BenchReport BenchmarkSolverChain(std::size_t repeat, std::uint64_t seed) {
  if (repeat < 1) throw InvalidArgument("repeat must be >= 1");
  SceneConfig scene;
  scene.n_points = 200;
  scene.noise_px = 0.5;
  scene.seed = seed;
  const SyntheticPair pair = Generate(scene);
  const ImageSize size = scene.intrinsics.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pair.matches.size() - 1);
  std::vector<std::pair<std::size_t, std::size_t>> samples(repeat);
  BenchReport report;
  report.repeat = repeat;
  report.size = size;
  report.input_digest = 0xcbf29ce484222325ULL;
  for (auto& [i, j] : samples) {
    i = pick(rng);
    do {
      j = pick(rng);
    } while (j == i);
    for (std::size_t k : {i, j}) {
      const Match& m = pair.matches[k];
      for (double v : {m.left.x(), m.left.y(), m.right.x(), m.right.y()}) {
        Fnv1a(report.input_digest, v);
      }
    }
  }

  std::vector<double> times_ms(repeat);
  volatile double sink = 0.0;
  for (std::size_t k = 0; k < repeat; ++k) {
    const auto& [i, j] = samples[k];
    const auto start = std::chrono::steady_clock::now();
    const auto h = RectifyFromSample(pair.matches[i], pair.matches[j], size,
                                     H22Mode::kPaper, 0.0);
    const auto stop = std::chrono::steady_clock::now();
    times_ms[k] = std::chrono::duration<double, std::milli>(stop - start).count();
    if (h) {
      sink = sink + h->left.matrix()(0, 0);
    } else {
      ++report.degenerate;
    }
  }

  double sum = 0.0;
  for (double t : times_ms) sum += t;
  report.mean_ms = sum / static_cast<double>(repeat);
  std::sort(times_ms.begin(), times_ms.end());
  report.median_ms = repeat % 2 == 1
                         ? times_ms[repeat / 2]
                         : 0.5 * (times_ms[repeat / 2 - 1] + times_ms[repeat / 2]);
  // Nearest-rank percentile.
  const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(repeat)));
  report.p99_ms = times_ms[std::max<std::size_t>(rank, 1) - 1];
  return report;
}

std::string BenchCsvHeader() {
  return "repeat,width,height,median_ms,mean_ms,p99_ms,degenerate,input_digest";
}

std::string BenchCsvRow(const BenchReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%zu,%d,%d,%.9g,%.9g,%.9g,%zu,%016llx", r.repeat,
                r.size.width, r.size.height, r.median_ms, r.mean_ms, r.p99_ms,
                r.degenerate, static_cast<unsigned long long>(r.input_digest));
  return buf;
}

}  // namespace rotrect
