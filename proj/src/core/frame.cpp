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

#include "hdrcheck/frame.h"

#include <string>

#include "hdrcheck/error.h"

namespace hdrcheck {

HdrSignalling HdrSignalling::hdr10(bool full_range) {
  HdrSignalling s;
  s.colour = ColourDescription{cicp::kPrimariesBt2020, cicp::kTransferPq, cicp::kMatrixBt2020Ncl,
                               full_range};
  return s;
}

const char* to_string(ChromaFormat c) { return c == ChromaFormat::k444 ? "444" : "420"; }

const char* to_string(ColorModel m) { return m == ColorModel::kRgb ? "rgb" : "ycbcr"; }

std::pair<int, int> plane_size(int width, int height, ChromaFormat chroma, int plane_index) {
  if (plane_index == 0 || chroma == ChromaFormat::k444) return {width, height};
  return {(width + 1) / 2, (height + 1) / 2};
}

Frame Frame::make(int width, int height, int bit_depth, ChromaFormat chroma, ColorModel model,
                  SignalRange range) {
  if (width <= 0 || height <= 0) throw ParameterError("frame dimensions must be positive");
  if (bit_depth < 8 || bit_depth > 16) throw ParameterError("bit depth must be in [8, 16]");
  if (model == ColorModel::kRgb && chroma != ChromaFormat::k444)
    throw ParameterError("RGB frames must be 4:4:4");
  Frame f;
  f.width = width;
  f.height = height;
  f.bit_depth = bit_depth;
  f.chroma = chroma;
  f.model = model;
  f.range = range;
  for (int i = 0; i < 3; ++i) {
    auto [pw, ph] = plane_size(width, height, chroma, i);
    const PlaneKind kind = f.plane_kind(i);
    const std::uint16_t fill =
        kind == PlaneKind::kChroma ? static_cast<std::uint16_t>(1 << (bit_depth - 1))
                                   : static_cast<std::uint16_t>(
                                         nominal_min_code(bit_depth, range, PlaneKind::kLuma));
    f.planes[i] = Plane(pw, ph, fill);
  }
  return f;
}

void Frame::validate() const {
  if (width <= 0 || height <= 0) throw ParameterError("frame dimensions must be positive");
  if (bit_depth < 8 || bit_depth > 16) throw ParameterError("bit depth must be in [8, 16]");
  if (model == ColorModel::kRgb && chroma != ChromaFormat::k444)
    throw ParameterError("RGB frames must be 4:4:4");
  const int limit = max_code();
  for (int i = 0; i < 3; ++i) {
    auto [pw, ph] = plane_size(width, height, chroma, i);
    const Plane& p = planes[i];
    if (p.width != pw || p.height != ph ||
        p.samples.size() != static_cast<std::size_t>(pw) * ph)
      throw ParameterError("plane " + std::to_string(i) + " geometry inconsistent with frame");
    for (std::uint16_t s : p.samples)
      if (s > limit)
        throw ParameterError("plane " + std::to_string(i) + " sample " + std::to_string(s) +
                             " exceeds " + std::to_string(bit_depth) + "-bit container");
  }
}

bool Frame::same_pixels(const Frame& o) const {
  return width == o.width && height == o.height && bit_depth == o.bit_depth &&
         chroma == o.chroma && model == o.model && range == o.range && planes == o.planes;
}

}  // namespace hdrcheck
