#pragma once

// Independent reference computations for tests. Everything here uses plain
// arrays and explicit loops so it shares no code path with the library.

#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace rotrect::oracle {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

inline Mat3 Mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Vec3 Mul(const Mat3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) r[i] += a[i][k] * v[k];
  return r;
}

inline Mat3 Transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

inline Mat3 RotZ(double t) {
  return {{{std::cos(t), -std::sin(t), 0}, {std::sin(t), std::cos(t), 0}, {0, 0, 1}}};
}
inline Mat3 RotY(double t) {
  return {{{std::cos(t), 0, std::sin(t)}, {0, 1, 0}, {-std::sin(t), 0, std::cos(t)}}};
}
inline Mat3 RotX(double t) {
  return {{{1, 0, 0}, {0, std::cos(t), -std::sin(t)}, {0, std::sin(t), std::cos(t)}}};
}

inline Mat3 Euler(double yaw, double pitch, double roll) {
  return Mul(Mul(RotZ(yaw), RotY(pitch)), RotX(roll));
}

inline Mat3 Diag(double a, double b, double c) {
  return {{{a, 0, 0}, {0, b, 0}, {0, 0, c}}};
}

// K [R | t] [P; 1], dehomogenized.
inline std::array<double, 2> Project(const Vec3& p, const Mat3& R, const Vec3& t,
                                     double fx, double fy) {
  double P[3][4];
  const double f[3] = {fx, fy, 1.0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) P[i][j] = f[i] * R[i][j];
    P[i][3] = f[i] * t[i];
  }
  const double X[4] = {p[0], p[1], p[2], 1.0};
  double q[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) q[i] += P[i][j] * X[j];
  return {q[0] / q[2], q[1] / q[2]};
}

// K R^-1 K^-1 with R orthonormal.
inline Mat3 CalibratedHomography(const Mat3& R, double fx, double fy) {
  return Mul(Mul(Diag(fx, fy, 1), Transpose(R)), Diag(1 / fx, 1 / fy, 1));
}

// Expanded K R K^-1 for the left (sign = +1) and right (sign = -1) pose,
// written entry by entry.
inline Mat3 ConjugateClosedForm(double a, double b, double fx, double fy, double sign) {
  const double ca = std::cos(a), sa = std::sin(a), cb = std::cos(b), sb = std::sin(b);
  return {{{cb * ca, -sign * fx * sa / fy, -sign * fx * ca * sb},
           {sign * fy * cb * sa / fx, ca, -fy * sa * sb},
           {sign * sb / fx, 0, cb}}};
}

inline std::array<double, 2> Apply(const Mat3& h, double x, double y) {
  const Vec3 q = Mul(h, Vec3{x, y, 1.0});
  return {q[0] / q[2], q[1] / q[2]};
}

inline Mat3 Inverse(const Mat3& m) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  Mat3 inv;
  inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return inv;
}

// Exact two-point unknowns of a latitudinal pair with angles (a, b).
inline std::pair<double, double> LatitudinalSolution(double a, double b, double fx,
                                                     double fy) {
  return {-std::tan(b) / (fx * std::cos(a)), -(fy / fx) * std::tan(a)};
}

// Mean |dy| accumulated backwards in long double.
inline double Vae(const std::vector<std::array<double, 4>>& rows) {
  long double sum = 0.0L;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    sum += std::fabs(static_cast<long double>((*it)[1]) - (*it)[3]);
  }
  return static_cast<double>(sum / rows.size());
}

// NVD of a centered-frame homography via explicit corner mapping.
inline double Nvd(const Mat3& h, int width, int height) {
  const double cx = 0.5 * (width - 1), cy = 0.5 * (height - 1);
  const double corners[4][2] = {
      {0, 0}, {width - 1.0, 0}, {0, height - 1.0}, {width - 1.0, height - 1.0}};
  double total = 0.0;
  for (const auto& c : corners) {
    const auto p = Apply(h, c[0] - cx, c[1] - cy);
    total += std::hypot(p[0] + cx - c[0], p[1] + cy - c[1]);
  }
  return total / std::sqrt(double(width) * width + double(height) * height);
}

// Least-squares (t1, t2) over all rows of the linear two-point system.
inline std::pair<double, double> LeastSquaresSolution(
    const std::vector<std::array<double, 4>>& rows) {
  double ata[2][2] = {{0, 0}, {0, 0}}, atb[2] = {0, 0};
  for (const auto& r : rows) {
    const double a0 = -(r[2] * r[1] + r[0] * r[3]);
    const double a1 = r[0] + r[2];
    const double b = r[3] - r[1];
    ata[0][0] += a0 * a0;
    ata[0][1] += a0 * a1;
    ata[1][1] += a1 * a1;
    atb[0] += a0 * b;
    atb[1] += a1 * b;
  }
  const double det = ata[0][0] * ata[1][1] - ata[0][1] * ata[0][1];
  return {(atb[0] * ata[1][1] - ata[0][1] * atb[1]) / det,
          (ata[0][0] * atb[1] - ata[0][1] * atb[0]) / det};
}

}  // namespace rotrect::oracle
