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

#include "hdrcheck/conversion.h"

#include <algorithm>
#include <string>

#include "hdrcheck/error.h"

namespace hdrcheck {

namespace {

std::uint16_t to_sample(const CodeValue& cv) { return static_cast<std::uint16_t>(cv.code); }

double sample_value(const Frame& f, int plane, int x, int y) {
  return dequantize(CodeValue{f.planes[plane].at(x, y), f.bit_depth, f.range}, f.plane_kind(plane));
}

// Interpolation weights for upsampling one chroma row/column to luma rate.
// Horizontal: chroma i sits on luma 2i. Vertical: chroma j sits on luma
// 2j + 0.5.
struct Tap {
  int i0, i1;
  double w0, w1;
};

Tap horizontal_tap(int x, int chroma_width) {
  const int i = x / 2;
  if (x % 2 == 0) return {i, i, 1.0, 0.0};
  const int next = std::min(i + 1, chroma_width - 1);
  return {i, next, 0.5, 0.5};
}

Tap vertical_tap(int y, int chroma_height) {
  const int j = y / 2;
  if (y % 2 == 0) return {std::max(j - 1, 0), j, 0.25, 0.75};
  return {j, std::min(j + 1, chroma_height - 1), 0.75, 0.25};
}

// Bilinear chroma at luma position (x, y) from a double-valued chroma grid.
double upsample(const std::vector<double>& c, int cw, int ch, int x, int y) {
  const Tap h = horizontal_tap(x, cw);
  const Tap v = vertical_tap(y, ch);
  auto row = [&](int j) {
    return h.w0 * c[static_cast<std::size_t>(j) * cw + h.i0] +
           h.w1 * c[static_cast<std::size_t>(j) * cw + h.i1];
  };
  return v.w0 * row(v.i0) + v.w1 * row(v.i1);
}

std::vector<double> chroma_plane_values(const Frame& f, int plane) {
  const Plane& p = f.planes[plane];
  std::vector<double> out(p.samples.size());
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x)
      out[static_cast<std::size_t>(y) * p.width + x] = sample_value(f, plane, x, y);
  return out;
}

}  // namespace

MatrixCoefficients frame_matrix(const Frame& f) {
  if (f.signalling.colour) {
    if (auto m = matrix_from_code(f.signalling.colour->matrix_coefficients)) return *m;
  }
  return MatrixCoefficients::kBt2020Ncl;
}

Frame convert_rgb444_to_ycbcr420(const Frame& rgb, const To420Params& params) {
  if (rgb.model != ColorModel::kRgb || rgb.chroma != ChromaFormat::k444)
    throw ParameterError("4:2:0 conversion requires an RGB 4:4:4 input");
  if (rgb.width % 2 != 0 || rgb.height % 2 != 0)
    throw ParameterError("4:2:0 conversion requires even width and height, got " +
                         std::to_string(rgb.width) + "x" + std::to_string(rgb.height));
  if (rgb.bit_depth < 10 || rgb.bit_depth > 16)
    throw ParameterError("4:2:0 conversion input must be 10 to 16 bit");
  if (params.bit_depth < 8 || params.bit_depth > 16)
    throw ParameterError("4:2:0 output must be 8 to 16 bit");

  const int w = rgb.width;
  const int h = rgb.height;
  Frame out = Frame::make(w, h, params.bit_depth, ChromaFormat::k420, ColorModel::kYcbcr,
                          params.range);
  out.signalling = rgb.signalling;
  const int matrix_code =
      params.matrix == MatrixCoefficients::kBt709 ? cicp::kMatrixBt709 : cicp::kMatrixBt2020Ncl;
  if (!out.signalling.colour) out.signalling = HdrSignalling::hdr10();
  out.signalling.colour->matrix_coefficients = matrix_code;
  out.signalling.colour->full_range = params.range == SignalRange::kFull;

  std::vector<double> cb(static_cast<std::size_t>(w) * h);
  std::vector<double> cr(cb.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Rgb px{sample_value(rgb, 0, x, y), sample_value(rgb, 1, x, y),
                   sample_value(rgb, 2, x, y)};
      const Ycbcr ycc = rgb_to_ycbcr(px, params.matrix);
      out.planes[0].at(x, y) =
          to_sample(quantize(ycc.y, params.bit_depth, params.range, PlaneKind::kLuma));
      cb[static_cast<std::size_t>(y) * w + x] = ycc.cb;
      cr[static_cast<std::size_t>(y) * w + x] = ycc.cr;
    }
  }

  const int cw = w / 2;
  const int ch = h / 2;
  auto filtered = [&](const std::vector<double>& c, int cx, int row) {
    const std::size_t base = static_cast<std::size_t>(row) * w;
    const int x = 2 * cx;
    const double left = c[base + std::max(x - 1, 0)];
    const double right = c[base + std::min(x + 1, w - 1)];
    return (left + 2.0 * c[base + x] + right) * 0.25;
  };
  for (int cy = 0; cy < ch; ++cy) {
    for (int cx = 0; cx < cw; ++cx) {
      const double vb = 0.5 * (filtered(cb, cx, 2 * cy) + filtered(cb, cx, 2 * cy + 1));
      const double vr = 0.5 * (filtered(cr, cx, 2 * cy) + filtered(cr, cx, 2 * cy + 1));
      out.planes[1].at(cx, cy) =
          to_sample(quantize(vb, params.bit_depth, params.range, PlaneKind::kChroma));
      out.planes[2].at(cx, cy) =
          to_sample(quantize(vr, params.bit_depth, params.range, PlaneKind::kChroma));
    }
  }
  return out;
}

std::vector<Frame> convert_rgb444_to_ycbcr420(const std::vector<Frame>& frames,
                                              const To420Params& params) {
  std::vector<Frame> out;
  out.reserve(frames.size());
  for (const Frame& f : frames) out.push_back(convert_rgb444_to_ycbcr420(f, params));
  return out;
}

std::vector<Rgb> frame_to_nonlinear_rgb(const Frame& f) {
  const int w = f.width;
  const int h = f.height;
  std::vector<Rgb> out(static_cast<std::size_t>(w) * h);
  if (f.model == ColorModel::kRgb) {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        out[static_cast<std::size_t>(y) * w + x] = {sample_value(f, 0, x, y),
                                                    sample_value(f, 1, x, y),
                                                    sample_value(f, 2, x, y)};
    return out;
  }
  const MatrixCoefficients m = frame_matrix(f);
  const std::vector<double> cb = chroma_plane_values(f, 1);
  const std::vector<double> cr = chroma_plane_values(f, 2);
  const int cw = f.planes[1].width;
  const int ch = f.planes[1].height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double vb, vr;
      if (f.chroma == ChromaFormat::k444) {
        vb = cb[static_cast<std::size_t>(y) * w + x];
        vr = cr[static_cast<std::size_t>(y) * w + x];
      } else {
        vb = upsample(cb, cw, ch, x, y);
        vr = upsample(cr, cw, ch, x, y);
      }
      out[static_cast<std::size_t>(y) * w + x] = ycbcr_to_rgb({sample_value(f, 0, x, y), vb, vr}, m);
    }
  }
  return out;
}

Frame convert_ycbcr420_to_rgb444(const Frame& ycc, const To444Params& params) {
  if (ycc.model != ColorModel::kYcbcr || ycc.chroma != ChromaFormat::k420)
    throw ParameterError("4:4:4 reconstruction requires a Y'CbCr 4:2:0 input");
  if (ycc.width % 2 != 0 || ycc.height % 2 != 0)
    throw ParameterError("4:2:0 input must have even width and height");
  Frame f = ycc;
  if (!f.signalling.colour || !matrix_from_code(f.signalling.colour->matrix_coefficients)) {
    if (!f.signalling.colour) f.signalling = HdrSignalling::hdr10();
    f.signalling.colour->matrix_coefficients =
        params.matrix == MatrixCoefficients::kBt709 ? cicp::kMatrixBt709 : cicp::kMatrixBt2020Ncl;
  }
  const std::vector<Rgb> rgb = frame_to_nonlinear_rgb(f);
  Frame out = Frame::make(ycc.width, ycc.height, params.bit_depth, ChromaFormat::k444,
                          ColorModel::kRgb, params.range);
  out.signalling = f.signalling;
  out.signalling.colour->matrix_coefficients = cicp::kMatrixIdentity;
  out.signalling.colour->full_range = params.range == SignalRange::kFull;
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    out.planes[0].samples[i] =
        to_sample(quantize(rgb[i].r, params.bit_depth, params.range, PlaneKind::kLuma));
    out.planes[1].samples[i] =
        to_sample(quantize(rgb[i].g, params.bit_depth, params.range, PlaneKind::kLuma));
    out.planes[2].samples[i] =
        to_sample(quantize(rgb[i].b, params.bit_depth, params.range, PlaneKind::kLuma));
  }
  return out;
}

std::vector<Frame> convert_ycbcr420_to_rgb444(const std::vector<Frame>& frames,
                                              const To444Params& params) {
  std::vector<Frame> out;
  out.reserve(frames.size());
  for (const Frame& f : frames) out.push_back(convert_ycbcr420_to_rgb444(f, params));
  return out;
}

OutOfGamutMap gamut_marker(const Frame& frame, const PrimariesSet& target, double tolerance) {
  if (!frame.signalling.colour)
    throw UnsupportedSignalError("gamut marker needs colour signalling on the frame");
  const ColourDescription& cd = *frame.signalling.colour;
  if (cd.transfer_characteristics != cicp::kTransferPq)
    throw UnsupportedSignalError("gamut marker supports PQ only, frame transfer is " +
                                 std::to_string(cd.transfer_characteristics));
  const auto source = primaries_from_code(cd.colour_primaries);
  if (!source)
    throw UnsupportedSignalError("unknown colour primaries code " +
                                 std::to_string(cd.colour_primaries));

  const RgbSpaceConverter convert(*source, target);
  const std::vector<Rgb> rgb = frame_to_nonlinear_rgb(frame);
  OutOfGamutMap map;
  map.width = frame.width;
  map.height = frame.height;
  map.mask.assign(rgb.size(), 0);
  const double lo = -tolerance;
  const double hi = 1.0 + tolerance;
  for (std::size_t i = 0; i < rgb.size(); ++i) {
    const Rgb linear{pq_signal_to_nits(rgb[i].r) / pq::kPeakNits,
                     pq_signal_to_nits(rgb[i].g) / pq::kPeakNits,
                     pq_signal_to_nits(rgb[i].b) / pq::kPeakNits};
    const Rgb t = convert(linear);
    const bool out = t.r < lo || t.r > hi || t.g < lo || t.g > hi || t.b < lo || t.b > hi;
    if (out) {
      map.mask[i] = 1;
      ++map.flagged;
    }
  }
  map.fraction = rgb.empty() ? 0.0 : static_cast<double>(map.flagged) / rgb.size();
  return map;
}

}  // namespace hdrcheck
