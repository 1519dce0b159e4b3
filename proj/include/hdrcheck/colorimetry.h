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

#ifndef HDRCHECK_COLORIMETRY_H
#define HDRCHECK_COLORIMETRY_H

#include <array>
#include <optional>
#include <string>

namespace hdrcheck {

////////////////////////////////////////////////////////////////////////////////
// SMPTE ST 2084 (PQ)

namespace pq {
inline constexpr double kM1 = 2610.0 / 16384.0;
inline constexpr double kM2 = 2523.0 / 4096.0 * 128.0;
inline constexpr double kC1 = 3424.0 / 4096.0;
inline constexpr double kC2 = 2413.0 / 4096.0 * 32.0;
inline constexpr double kC3 = 2392.0 / 4096.0 * 32.0;
inline constexpr double kPeakNits = 10000.0;
}  // namespace pq

// Normalized non-linear PQ signal E' in [0, 1].
class TransferCode {
 public:
  // Throws DomainError outside [0, 1] (and for NaN).
  static TransferCode checked(double value);
  // Clamps to [0, 1]; NaN maps to 0.
  static TransferCode clamped(double value);

  double value() const { return value_; }

 private:
  explicit TransferCode(double v) : value_(v) {}
  double value_;
};

// Absolute luminance in cd/m^2. Always >= 0.
class Luminance {
 public:
  // Throws DomainError for negative or NaN input.
  explicit Luminance(double nits);
  double nits() const { return nits_; }

 private:
  double nits_;
};

Luminance pq_eotf(TransferCode e);
// Throws DomainError above 10000 nits.
TransferCode pq_inv_eotf(Luminance y);

// Unchecked scalar forms for per-pixel loops. Inputs are clamped to the
// representable range.
double pq_signal_to_nits(double e);
double pq_nits_to_signal(double nits);

////////////////////////////////////////////////////////////////////////////////
// Quantization

enum class SignalRange { kNarrow, kFull };
enum class PlaneKind { kLuma, kChroma };

const char* to_string(SignalRange range);

struct CodeValue {
  int code = 0;
  int bit_depth = 10;
  SignalRange range = SignalRange::kNarrow;

  int max_code() const { return (1 << bit_depth) - 1; }
  // True when a narrow-range code lies outside the nominal video range
  // for its plane kind. Always false for full range.
  bool outside_nominal(PlaneKind kind) const;
};

// Lowest and highest nominal code for (bit_depth, range, kind). For full
// range this is the whole container.
int nominal_min_code(int bit_depth, SignalRange range, PlaneKind kind);
int nominal_max_code(int bit_depth, SignalRange range, PlaneKind kind);

// Luma input is E' in [0, 1]; chroma input is in [-0.5, 0.5]. Values are
// rounded half away from zero and clamped only to the container.
CodeValue quantize(double value, int bit_depth, SignalRange range, PlaneKind kind);
double dequantize(const CodeValue& cv, PlaneKind kind);
// Size of one code step in the normalized domain.
double quantization_step(int bit_depth, SignalRange range, PlaneKind kind);

////////////////////////////////////////////////////////////////////////////////
// Y'CbCr matrices (non-constant luminance)

enum class MatrixCoefficients { kBt709, kBt2020Ncl };

struct LumaWeights {
  double kr;
  double kb;
};

LumaWeights luma_weights(MatrixCoefficients m);
// H.273 code (1 or 9); nullopt for anything else.
std::optional<MatrixCoefficients> matrix_from_code(int code);

struct Rgb {
  double r = 0, g = 0, b = 0;
};

struct Ycbcr {
  double y = 0, cb = 0, cr = 0;
};

Ycbcr rgb_to_ycbcr(const Rgb& rgb, MatrixCoefficients m);
Rgb ycbcr_to_rgb(const Ycbcr& ycc, MatrixCoefficients m);

////////////////////////////////////////////////////////////////////////////////
// Primaries, XYZ and gamut

struct Chromaticity {
  double x = 0, y = 0;
};

struct Xyz {
  double x = 0, y = 0, z = 0;
};

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity();
  Mat3 operator*(const Mat3& o) const;
  Rgb apply(const Rgb& v) const;
  Xyz apply_xyz(const Rgb& v) const;
  double determinant() const;
  // Throws DomainError when singular.
  Mat3 inverse() const;
};

struct PrimariesSet {
  std::string name;
  Chromaticity red, green, blue, white;

  static PrimariesSet bt709();
  static PrimariesSet bt2020();
  static PrimariesSet dci_p3_d65();

  // Signed area of the R,G,B triangle in the xy plane.
  double triangle_area() const;
  // Throws DomainError for a degenerate triangle or white point.
  void validate() const;
};

// H.273 colour_primaries code (1, 9, 12); nullopt for anything else.
std::optional<PrimariesSet> primaries_from_code(int code);
// Named presets: "bt709", "bt2020", "p3", "dci-p3-d65".
std::optional<PrimariesSet> primaries_from_name(const std::string& name);

// Linear RGB -> CIE XYZ with Y(white) = 1.
Mat3 rgb_to_xyz_matrix(const PrimariesSet& p);

// Linear-light conversion between two RGB spaces sharing a white point
// (no chromatic adaptation). Output components are never clamped.
class RgbSpaceConverter {
 public:
  RgbSpaceConverter(const PrimariesSet& from, const PrimariesSet& to);
  Rgb operator()(const Rgb& linear) const { return matrix_.apply(linear); }
  const Mat3& matrix() const { return matrix_; }

 private:
  Mat3 matrix_;
};

Rgb rgb_space_convert(const Rgb& linear, const PrimariesSet& from, const PrimariesSet& to);

// Throws DomainError when X+Y+Z is not positive.
Chromaticity xy_chromaticity(const Xyz& xyz);

inline constexpr double kDefaultGamutTolerance = 1e-4;

}  // namespace hdrcheck

#endif  // HDRCHECK_COLORIMETRY_H
