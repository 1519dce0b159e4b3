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

#ifndef HDRCHECK_FRAME_H
#define HDRCHECK_FRAME_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdrcheck/colorimetry.h"

namespace hdrcheck {

// H.273 code points used throughout.
namespace cicp {
inline constexpr int kPrimariesBt709 = 1;
inline constexpr int kPrimariesBt2020 = 9;
inline constexpr int kPrimariesP3D65 = 12;
inline constexpr int kTransferBt709 = 1;
inline constexpr int kTransferPq = 16;
inline constexpr int kTransferHlg = 18;
inline constexpr int kMatrixIdentity = 0;
inline constexpr int kMatrixBt709 = 1;
inline constexpr int kMatrixBt2020Ncl = 9;
}  // namespace cicp

struct ColourDescription {
  int colour_primaries = 2;
  int transfer_characteristics = 2;
  int matrix_coefficients = 2;
  bool full_range = false;

  bool operator==(const ColourDescription&) const = default;
};

// Chromaticities labelled R, G, B after normalization; luminance in nits.
struct MasteringDisplay {
  std::array<Chromaticity, 3> primaries{};  // R, G, B
  Chromaticity white{};
  double max_luminance = 0;
  double min_luminance = 0;
  // False when the stored order could not be matched against a known
  // primaries set and a geometric labelling was used instead.
  bool order_matched = true;
};

struct ContentLight {
  unsigned max_cll = 0;
  unsigned max_fall = 0;
  bool operator==(const ContentLight&) const = default;
};

// Container-level HDR signalling. Absent boxes stay absent.
struct HdrSignalling {
  std::optional<ColourDescription> colour;
  std::optional<MasteringDisplay> mastering_display;
  std::optional<ContentLight> content_light;

  // BT.2020 / PQ / BT.2020-NCL with the given range flag.
  static HdrSignalling hdr10(bool full_range = false);
};

enum class ChromaFormat { k444, k420 };
enum class ColorModel { kYcbcr, kRgb };

const char* to_string(ChromaFormat c);
const char* to_string(ColorModel m);

struct Plane {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> samples;

  Plane() = default;
  Plane(int w, int h, std::uint16_t fill = 0)
      : width(w), height(h), samples(static_cast<std::size_t>(w) * h, fill) {}

  std::uint16_t& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }
  std::uint16_t at(int x, int y) const {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  bool operator==(const Plane&) const = default;
};

// Planar picture. For kYcbcr the planes are Y', Cb, Cr; for kRgb they are
// R', G', B' and the chroma format must be 4:4:4.
struct Frame {
  int width = 0;
  int height = 0;
  int bit_depth = 10;
  ChromaFormat chroma = ChromaFormat::k420;
  ColorModel model = ColorModel::kYcbcr;
  SignalRange range = SignalRange::kNarrow;
  HdrSignalling signalling;
  std::array<Plane, 3> planes;

  // Allocates planes filled with the range's black (luma/RGB) and neutral
  // chroma codes.
  static Frame make(int width, int height, int bit_depth, ChromaFormat chroma,
                    ColorModel model, SignalRange range);

  int max_code() const { return (1 << bit_depth) - 1; }
  PlaneKind plane_kind(int index) const {
    return (model == ColorModel::kYcbcr && index > 0) ? PlaneKind::kChroma : PlaneKind::kLuma;
  }
  // Throws ParameterError if plane geometry or sample values are
  // inconsistent with the header fields.
  void validate() const;

  bool same_pixels(const Frame& o) const;
};

// Plane dimensions for a frame of the given size and subsampling.
std::pair<int, int> plane_size(int width, int height, ChromaFormat chroma, int plane_index);

}  // namespace hdrcheck

#endif  // HDRCHECK_FRAME_H
