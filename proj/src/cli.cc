#include "rotrect/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rotrect/bench.h"
#include "rotrect/error.h"
#include "rotrect/files.h"
#include "rotrect/imaging.h"
#include "rotrect/metrics.h"
#include "rotrect/pgm.h"
#include "rotrect/pipeline.h"
#include "rotrect/synth.h"

namespace rotrect::cli {
namespace {

// Usage problems detected after flag parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SynthOptions {
  SceneConfig scene;
  double focal = 400.0;
  int width = 960;
  int height = 720;
  std::string out_matches = "synth_matches.csv";
  std::string out_truth = "synth_truth.json";
};

struct RectifyOptions {
  std::string matches;
  int width = 0;
  int height = 0;
  int iters = 1000;
  std::uint64_t seed = 0;
  std::string h22_mode = "paper";
  double h23 = 0.0;
  double early_exit = 0.05;
  std::size_t min_matches = 2;
  std::string out;
  std::string left;
  std::string right;
  std::string out_prefix;
};

struct EvalOptions {
  std::string matches;
  std::string homographies;
};

struct DepthOptions {
  std::string left;
  std::string right;
  int block = 9;
  int max_disp = 64;
  std::string out;
};

struct BenchOptions {
  std::size_t repeat = 10000;
  std::uint64_t seed = 0;
};

std::string SceneJson(const SceneConfig& s) {
  nlohmann::ordered_json j;
  j["radius_m"] = s.radius;
  j["depth_min"] = s.depth_min;
  j["depth_max"] = s.depth_max;
  j["roll_deg"] = s.roll_deg;
  j["pitch_deg"] = s.pitch_deg;
  j["points"] = s.n_points;
  j["noise_px"] = s.noise_px;
  j["seed"] = s.seed;
  j["width"] = s.intrinsics.width;
  j["height"] = s.intrinsics.height;
  j["focal"] = s.intrinsics.fx;
  j["cube_half_angle_deg"] = s.cube_half_angle_deg;
  return j.dump();
}

int RunSynth(SynthOptions opt, std::ostream& out) {
  opt.scene.intrinsics = {opt.focal, opt.focal, opt.width, opt.height};
  const SyntheticPair pair = Generate(opt.scene);
  const ImageSize size = opt.scene.intrinsics.size();
  WriteMatchCsv(opt.out_matches, pair.matches.ToTopLeft(size));
  const MetricReport report = Evaluate(pair.true_homographies, pair.matches, size);
  WriteHomographyFile(opt.out_truth,
                      MakeHomographyFile(pair.true_homographies, size, report.vae,
                                         report.nvd_left, report.nvd_right));
  out << SceneJson(opt.scene) << "\n";
  return kOk;
}

void WriteRectifiedImages(const RectifyOptions& opt, const HomographyPair& pair,
                          const ImageSize& size) {
  const GrayImage left = ReadPgm(opt.left);
  const GrayImage right = ReadPgm(opt.right);
  if (left.size() != size || right.size() != size) {
    throw UsageError("images must be " + std::to_string(size.width) + "x" +
                     std::to_string(size.height));
  }
  const Homography hl = CenteredToTopLeft(pair.left, size);
  const Homography hr = CenteredToTopLeft(pair.right, size);
  const CanvasLayout layout = CommonBounds(hl, hr, size);
  WritePgm(opt.out_prefix + "_left.pgm", Warp(left, hl, layout.size, layout.offset_left));
  WritePgm(opt.out_prefix + "_right.pgm",
           Warp(right, hr, layout.size, layout.offset_right));
}

int RunRectify(const RectifyOptions& opt, std::ostream& out) {
  const bool any_image = !opt.left.empty() || !opt.right.empty() || !opt.out_prefix.empty();
  if (any_image && (opt.left.empty() || opt.right.empty() || opt.out_prefix.empty())) {
    throw UsageError("--left, --right and --out-prefix must be given together");
  }
  const ImageSize size{opt.width, opt.height};
  const MatchSet matches = ReadMatchCsv(opt.matches).ToCentered(size);

  RansacConfig cfg;
  cfg.iterations = opt.iters;
  cfg.seed = opt.seed;
  cfg.h22_mode = opt.h22_mode == "paper" ? H22Mode::kPaper : H22Mode::kUnitMean;
  cfg.h23 = opt.h23;
  cfg.early_exit_vae = opt.early_exit;
  cfg.min_matches = opt.min_matches;
  const RectificationResult result = Estimate(matches, size, cfg);

  const std::string text = SerializeHomographyFile(MakeHomographyFile(
      result.homographies, size, result.vae, result.nvd_left, result.nvd_right));
  if (opt.out.empty() || opt.out == "-") {
    out << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw FormatError("cannot write " + opt.out);
    f << text;
  }
  if (any_image) WriteRectifiedImages(opt, result.homographies, size);
  return kOk;
}

int RunEval(const EvalOptions& opt, std::ostream& out) {
  const HomographyFile file = ReadHomographyFile(opt.homographies);
  if (file.frame != "centered") {
    throw FrameMismatch("homography file frame is '" + file.frame +
                        "', expected 'centered'");
  }
  if (file.size.width < 2 || file.size.height < 2) {
    throw UsageError("homography file has an invalid image size");
  }
  const MatchSet matches = ReadMatchCsv(opt.matches).ToCentered(file.size);
  const MetricReport r = Evaluate(file.pair(), matches, file.size);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%zu\n", r.vae, r.nvd_left,
                r.nvd_right, r.n_points);
  out << buf;
  return kOk;
}

int RunDepth(const DepthOptions& opt, std::ostream& out) {
  if (opt.block < 3 || opt.block % 2 == 0) {
    throw UsageError("--block must be odd and >= 3");
  }
  if (opt.max_disp < 0) throw UsageError("--max-disp must be >= 0");
  const GrayImage left = ReadPgm(opt.left);
  const GrayImage right = ReadPgm(opt.right);
  const DisparityMap disp = BlockDisparity(left, right, opt.block, opt.max_disp);

  GrayImage vis(disp.width, disp.height, 0.0f);
  std::size_t valid = 0;
  for (int y = 0; y < disp.height; ++y) {
    for (int x = 0; x < disp.width; ++x) {
      if (!disp.valid(x, y)) continue;
      ++valid;
      if (opt.max_disp > 0) vis(x, y) = 255.0f * disp.at(x, y) / opt.max_disp;
    }
  }
  WritePgm(opt.out, vis);
  std::filesystem::path sidecar(opt.out);
  sidecar.replace_extension(".pfm");
  if (sidecar == std::filesystem::path(opt.out)) sidecar += ".raw.pfm";
  WritePfm(sidecar.string(), disp.width, disp.height, disp.values);
  out << "valid_pixels," << valid << "\n";
  return kOk;
}

int RunBench(const BenchOptions& opt, std::ostream& out) {
  const BenchReport report = BenchmarkSolverChain(opt.repeat, opt.seed);
  out << BenchCsvHeader() << "\n" << BenchCsvRow(report) << "\n";
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stereo rectification for rotating cameras", "rotrect"};
  app.require_subcommand(1);

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic latitudinal pair");
  synth_cmd->add_option("--radius-m", synth.scene.radius, "Sphere radius (m)")
      ->capture_default_str();
  synth_cmd->add_option("--depth-min", synth.scene.depth_min)->capture_default_str();
  synth_cmd->add_option("--depth-max", synth.scene.depth_max)->capture_default_str();
  synth_cmd->add_option("--roll-deg", synth.scene.roll_deg, "Roll between the views")
      ->capture_default_str();
  synth_cmd->add_option("--pitch-deg", synth.scene.pitch_deg, "Pitch between the views")
      ->capture_default_str();
  synth_cmd->add_option("--points", synth.scene.n_points)->capture_default_str();
  synth_cmd->add_option("--noise-px", synth.scene.noise_px)->capture_default_str();
  synth_cmd->add_option("--seed", synth.scene.seed)->capture_default_str();
  synth_cmd->add_option("--width", synth.width)->capture_default_str();
  synth_cmd->add_option("--height", synth.height)->capture_default_str();
  synth_cmd->add_option("--focal", synth.focal, "fx = fy (px)")->capture_default_str();
  synth_cmd->add_option("--cube-half-angle-deg", synth.scene.cube_half_angle_deg)
      ->capture_default_str();
  synth_cmd->add_option("--out-matches", synth.out_matches)->capture_default_str();
  synth_cmd->add_option("--out-truth", synth.out_truth)->capture_default_str();

  RectifyOptions rect;
  auto* rect_cmd = app.add_subcommand("rectify", "Estimate rectifying homographies");
  rect_cmd->add_option("--matches", rect.matches, "Match CSV (top-left pixels)")
      ->required();
  rect_cmd->add_option("--width", rect.width)->required()->check(CLI::Range(2, 1 << 20));
  rect_cmd->add_option("--height", rect.height)->required()->check(CLI::Range(2, 1 << 20));
  rect_cmd->add_option("--iters", rect.iters)->capture_default_str()->check(CLI::PositiveNumber);
  rect_cmd->add_option("--seed", rect.seed)->capture_default_str();
  rect_cmd->add_option("--h22-mode", rect.h22_mode)
      ->capture_default_str()
      ->check(CLI::IsMember({"paper", "unit-mean"}));
  rect_cmd->add_option("--h23", rect.h23)->capture_default_str();
  rect_cmd->add_option("--early-exit-vae", rect.early_exit)
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  rect_cmd->add_option("--min-matches", rect.min_matches)->capture_default_str();
  rect_cmd->add_option("--out", rect.out, "Homography JSON (default: stdout)");
  rect_cmd->add_option("--left", rect.left, "Left PGM to warp");
  rect_cmd->add_option("--right", rect.right, "Right PGM to warp");
  rect_cmd->add_option("--out-prefix", rect.out_prefix, "Prefix for warped PGMs");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "Print vae,nvd_left,nvd_right,n");
  eval_cmd->add_option("--matches", eval.matches)->required();
  eval_cmd->add_option("--homographies", eval.homographies)->required();

  DepthOptions depth;
  auto* depth_cmd = app.add_subcommand("depth", "Block-matching disparity of a rectified pair");
  depth_cmd->add_option("--left", depth.left)->required();
  depth_cmd->add_option("--right", depth.right)->required();
  depth_cmd->add_option("--block", depth.block)->capture_default_str();
  depth_cmd->add_option("--max-disp", depth.max_disp)->capture_default_str();
  depth_cmd->add_option("--out", depth.out)->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the minimal-sample solver chain");
  bench_cmd->add_option("--repeat", bench.repeat)->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*synth_cmd) return RunSynth(synth, out);
    if (*rect_cmd) return RunRectify(rect, out);
    if (*eval_cmd) return RunEval(eval, out);
    if (*depth_cmd) return RunDepth(depth, out);
    if (*bench_cmd) return RunBench(bench, out);
  } catch (const UnrealizableScene& e) {
    err << "error: " << e.what() << "\n";
    return kGenerationFailure;
  } catch (const NotEnoughMatches& e) {
    err << "error: " << e.what() << "\n";
    return kEstimationFailure;
  } catch (const AllSamplesDegenerate& e) {
    err << "error: " << e.what() << "\n";
    return kEstimationFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FrameMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace rotrect::cli
