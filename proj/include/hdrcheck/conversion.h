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

#ifndef HDRCHECK_CONVERSION_H
#define HDRCHECK_CONVERSION_H

#include <cstdint>
#include <vector>

#include "hdrcheck/colorimetry.h"
#include "hdrcheck/frame.h"

namespace hdrcheck {

// RGB 4:4:4 -> Y'CbCr 4:2:0.
//
// Chroma is computed per pixel in double precision, then filtered
// horizontally with [1, 2, 1] / 4 at even columns (co-sited, edge samples
// replicated) and vertically with [1, 1] / 2 over each row pair. This is
// the MPEG-2 / type-0 siting: chroma sits on even luma columns and halfway
// between luma rows. Quantization happens once, after filtering.
struct To420Params {
  int bit_depth = 10;
  MatrixCoefficients matrix = MatrixCoefficients::kBt2020Ncl;
  SignalRange range = SignalRange::kNarrow;
};

// Y'CbCr 4:2:0 -> RGB 4:4:4 with bilinear chroma upsampling that assumes
// the same type-0 siting.
struct To444Params {
  int bit_depth = 10;
  SignalRange range = SignalRange::kFull;
  // Only consulted when the source carries no usable matrix code.
  MatrixCoefficients matrix = MatrixCoefficients::kBt2020Ncl;
};

// Throws ParameterError for odd dimensions, non-RGB input, an input bit
// depth outside [10, 16] or an output bit depth outside [8, 16].
Frame convert_rgb444_to_ycbcr420(const Frame& rgb, const To420Params& params = {});
std::vector<Frame> convert_rgb444_to_ycbcr420(const std::vector<Frame>& frames,
                                              const To420Params& params = {});

Frame convert_ycbcr420_to_rgb444(const Frame& ycc, const To444Params& params = {});
std::vector<Frame> convert_ycbcr420_to_rgb444(const std::vector<Frame>& frames,
                                              const To444Params& params = {});

// Matrix implied by a frame's signalling, defaulting to BT.2020-NCL.
MatrixCoefficients frame_matrix(const Frame& f);

// Normalized non-linear R'G'B' for every pixel (row-major). Y'CbCr inputs
// are converted with the frame's matrix, 4:2:0 chroma is upsampled
// bilinearly. Values are not clamped.
std::vector<Rgb> frame_to_nonlinear_rgb(const Frame& f);

struct OutOfGamutMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> mask;  // 1 = outside target gamut
  std::size_t flagged = 0;
  double fraction = 0;
};

// Flags pixels whose linear-light components, after conversion from the
// frame's primaries to `target`, leave [-tolerance, 1 + tolerance]. Linear
// light is normalized so 1.0 is 10000 cd/m^2. Throws UnsupportedSignalError
// when the frame is not PQ-signalled or its primaries are unknown.
OutOfGamutMap gamut_marker(const Frame& frame, const PrimariesSet& target,
                           double tolerance = kDefaultGamutTolerance);

}  // namespace hdrcheck

#endif  // HDRCHECK_CONVERSION_H
