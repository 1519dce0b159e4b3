/*
 * Copyright 2026 The hdrcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>

#include "hdrcheck/colorimetry.h"
#include "hdrcheck/error.h"

namespace hdrcheck {

////////////////////////////////////////////////////////////////////////////////
// Y'CbCr

LumaWeights luma_weights(MatrixCoefficients m) {
  switch (m) {
    case MatrixCoefficients::kBt709:
      return {0.2126, 0.0722};
    case MatrixCoefficients::kBt2020Ncl:
      return {0.2627, 0.0593};
  }
  return {0.2627, 0.0593};
}

std::optional<MatrixCoefficients> matrix_from_code(int code) {
  if (code == 1) return MatrixCoefficients::kBt709;
  if (code == 9) return MatrixCoefficients::kBt2020Ncl;
  return std::nullopt;
}

Ycbcr rgb_to_ycbcr(const Rgb& rgb, MatrixCoefficients m) {
  const LumaWeights w = luma_weights(m);
  const double kg = 1.0 - w.kr - w.kb;
  const double y = w.kr * rgb.r + kg * rgb.g + w.kb * rgb.b;
  return {y, (rgb.b - y) / (2.0 * (1.0 - w.kb)), (rgb.r - y) / (2.0 * (1.0 - w.kr))};
}

Rgb ycbcr_to_rgb(const Ycbcr& ycc, MatrixCoefficients m) {
  const LumaWeights w = luma_weights(m);
  const double kg = 1.0 - w.kr - w.kb;
  const double r = ycc.y + 2.0 * (1.0 - w.kr) * ycc.cr;
  const double b = ycc.y + 2.0 * (1.0 - w.kb) * ycc.cb;
  const double g = (ycc.y - w.kr * r - w.kb * b) / kg;
  return {r, g, b};
}

////////////////////////////////////////////////////////////////////////////////
// 3x3 matrices

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
  return r;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
  return r;
}

Rgb Mat3::apply(const Rgb& v) const {
  return {m[0][0] * v.r + m[0][1] * v.g + m[0][2] * v.b,
          m[1][0] * v.r + m[1][1] * v.g + m[1][2] * v.b,
          m[2][0] * v.r + m[2][1] * v.g + m[2][2] * v.b};
}

Xyz Mat3::apply_xyz(const Rgb& v) const {
  const Rgb r = apply(v);
  return {r.r, r.g, r.b};
}

double Mat3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::inverse() const {
  const double det = determinant();
  if (!(std::fabs(det) > 1e-12) || !std::isfinite(det)) throw DomainError("singular matrix");
  Mat3 r;
  r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
  r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
  r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
  r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
  r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
  r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
  r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
  r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
  r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
  return r;
}

////////////////////////////////////////////////////////////////////////////////
// Primaries

namespace {
constexpr Chromaticity kD65{0.3127, 0.3290};
}

PrimariesSet PrimariesSet::bt709() {
  return {"bt709", {0.640, 0.330}, {0.300, 0.600}, {0.150, 0.060}, kD65};
}

PrimariesSet PrimariesSet::bt2020() {
  return {"bt2020", {0.708, 0.292}, {0.170, 0.797}, {0.131, 0.046}, kD65};
}

PrimariesSet PrimariesSet::dci_p3_d65() {
  return {"dci-p3-d65", {0.680, 0.320}, {0.265, 0.690}, {0.150, 0.060}, kD65};
}

double PrimariesSet::triangle_area() const {
  return 0.5 * ((green.x - red.x) * (blue.y - red.y) - (blue.x - red.x) * (green.y - red.y));
}

void PrimariesSet::validate() const {
  if (std::fabs(triangle_area()) < 1e-9)
    throw DomainError("primaries '" + name + "' form a degenerate triangle");
  if (!(white.y > 0.0)) throw DomainError("white point of '" + name + "' has y <= 0");
}

std::optional<PrimariesSet> primaries_from_code(int code) {
  switch (code) {
    case 1:
      return PrimariesSet::bt709();
    case 9:
      return PrimariesSet::bt2020();
    case 12:
      return PrimariesSet::dci_p3_d65();
    default:
      return std::nullopt;
  }
}

std::optional<PrimariesSet> primaries_from_name(const std::string& name) {
  if (name == "bt709" || name == "709") return PrimariesSet::bt709();
  if (name == "bt2020" || name == "2020") return PrimariesSet::bt2020();
  if (name == "p3" || name == "dci-p3-d65" || name == "p3-d65") return PrimariesSet::dci_p3_d65();
  return std::nullopt;
}

Mat3 rgb_to_xyz_matrix(const PrimariesSet& p) {
  p.validate();
  auto column = [](const Chromaticity& c) {
    return std::array<double, 3>{c.x / c.y, 1.0, (1.0 - c.x - c.y) / c.y};
  };
  const auto r = column(p.red);
  const auto g = column(p.green);
  const auto b = column(p.blue);
  Mat3 prim;
  for (int i = 0; i < 3; ++i) {
    prim.m[i][0] = r[i];
    prim.m[i][1] = g[i];
    prim.m[i][2] = b[i];
  }
  const auto w = column(p.white);
  const Rgb s = prim.inverse().apply({w[0], w[1], w[2]});
  for (int i = 0; i < 3; ++i) {
    prim.m[i][0] *= s.r;
    prim.m[i][1] *= s.g;
    prim.m[i][2] *= s.b;
  }
  return prim;
}

RgbSpaceConverter::RgbSpaceConverter(const PrimariesSet& from, const PrimariesSet& to)
    : matrix_(rgb_to_xyz_matrix(to).inverse() * rgb_to_xyz_matrix(from)) {}

Rgb rgb_space_convert(const Rgb& linear, const PrimariesSet& from, const PrimariesSet& to) {
  return RgbSpaceConverter(from, to)(linear);
}

Chromaticity xy_chromaticity(const Xyz& xyz) {
  const double sum = xyz.x + xyz.y + xyz.z;
  if (!(sum > 0.0)) throw DomainError("X+Y+Z must be positive for chromaticity");
  return {xyz.x / sum, xyz.y / sum};
}

}  // namespace hdrcheck
