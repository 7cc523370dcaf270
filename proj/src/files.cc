#include "rotrect/files.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rotrect/error.h"

namespace rotrect {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

double ParseField(std::string_view field, std::size_t line) {
  field = Trim(field);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw FormatError("line " + std::to_string(line) + ": malformed number '" +
                      std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw FormatError("line " + std::to_string(line) + ": non-finite value '" +
                      std::string(field) + "'");
  }
  return value;
}

void AppendNumber(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteAll(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("failed writing " + path);
}

Eigen::Matrix3d ParseMatrix(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 9) {
    throw FormatError(std::string("'") + key + "' must be an array of 9 numbers");
  }
  Eigen::Matrix3d m;
  for (int i = 0; i < 9; ++i) {
    const auto& v = j[key][i];
    if (!v.is_number()) {
      throw FormatError(std::string("'") + key + "' has a non-numeric entry");
    }
    m(i / 3, i % 3) = v.get<double>();
  }
  if (!m.allFinite()) throw FormatError(std::string("'") + key + "' is not finite");
  return m;
}

}  // namespace

MatchSet ReadMatchCsv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  MatchSet matches(PixelFrame::kTopLeft);
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = Trim(line);
    if (text.empty()) continue;
    if (!have_header) {
      if (text != "x1,y1,x2,y2") {
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected header 'x1,y1,x2,y2'");
      }
      have_header = true;
      continue;
    }
    double v[4];
    std::size_t start = 0;
    for (int k = 0; k < 4; ++k) {
      const std::size_t comma = text.find(',', start);
      if ((k < 3) == (comma == std::string_view::npos)) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected 4 comma-separated values");
      }
      v[k] = ParseField(text.substr(start, comma - start), line_no);
      start = comma + 1;
    }
    matches.Add(Match{{v[0], v[1]}, {v[2], v[3]}});
  }
  if (!have_header) throw FormatError("empty match file");
  if (matches.size() < 2) throw FormatError("match file needs at least 2 rows");
  return matches;
}

MatchSet ReadMatchCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return ReadMatchCsv(in);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteMatchCsv(std::ostream& out, const MatchSet& matches) {
  matches.RequireFrame(PixelFrame::kTopLeft);
  std::string text = "x1,y1,x2,y2\n";
  for (const Match& m : matches) {
    AppendNumber(text, m.left.x());
    text += ',';
    AppendNumber(text, m.left.y());
    text += ',';
    AppendNumber(text, m.right.x());
    text += ',';
    AppendNumber(text, m.right.y());
    text += '\n';
  }
  out << text;
}

void WriteMatchCsv(const std::string& path, const MatchSet& matches) {
  std::ostringstream ss;
  WriteMatchCsv(ss, matches);
  WriteAll(path, ss.str());
}

HomographyFile MakeHomographyFile(const HomographyPair& pair,
                                  const ImageSize& size, double vae,
                                  double nvd_left, double nvd_right) {
  HomographyFile file;
  file.size = size;
  file.H1 = pair.left.Normalized();
  file.H2 = pair.right.Normalized();
  file.vae = vae;
  file.nvd = {nvd_left, nvd_right};
  return file;
}

std::string SerializeHomographyFile(const HomographyFile& file) {
  nlohmann::ordered_json j;
  j["width"] = file.size.width;
  j["height"] = file.size.height;
  j["frame"] = file.frame;
  for (const auto& [key, m] : {std::pair{"H1", &file.H1}, std::pair{"H2", &file.H2}}) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i = 0; i < 9; ++i) arr.push_back((*m)(i / 3, i % 3));
    j[key] = std::move(arr);
  }
  j["vae"] = file.vae;
  j["nvd"] = {file.nvd[0], file.nvd[1]};
  return j.dump(2) + "\n";
}

HomographyFile ParseHomographyFile(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("homography file must be a JSON object");
  HomographyFile file;
  if (!j.contains("frame") || !j["frame"].is_string()) {
    throw FormatError("homography file lacks the mandatory 'frame' field");
  }
  file.frame = j["frame"].get<std::string>();
  for (const char* key : {"width", "height"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      throw FormatError(std::string("'") + key + "' must be an integer");
    }
  }
  file.size = {j["width"].get<int>(), j["height"].get<int>()};
  file.H1 = ParseMatrix(j, "H1");
  file.H2 = ParseMatrix(j, "H2");
  if (j.contains("vae") && j["vae"].is_number()) file.vae = j["vae"].get<double>();
  if (j.contains("nvd") && j["nvd"].is_array() && j["nvd"].size() == 2) {
    file.nvd = {j["nvd"][0].get<double>(), j["nvd"][1].get<double>()};
  }
  return file;
}

HomographyFile ReadHomographyFile(const std::string& path) {
  const std::string text = ReadAll(path);
  try {
    return ParseHomographyFile(text);
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void WriteHomographyFile(const std::string& path, const HomographyFile& file) {
  WriteAll(path, SerializeHomographyFile(file));
}

}  // namespace rotrect
