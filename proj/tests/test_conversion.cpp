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
#include <random>

#include <gtest/gtest.h>

#include "hdrcheck/conversion.h"
#include "hdrcheck/error.h"
#include "hdrcheck/verify.h"

namespace hdrcheck {
namespace {

Frame rgb_frame(int w, int h, int bits = 12) {
  Frame f = Frame::make(w, h, bits, ChromaFormat::k444, ColorModel::kRgb, SignalRange::kFull);
  f.signalling = HdrSignalling::hdr10(true);
  return f;
}

// Smooth PQ gradient: each channel ramps along a different direction.
Frame smooth_gradient(int w, int h, int bits = 12) {
  Frame f = rgb_frame(w, h, bits);
  const int max = f.max_code();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double u = static_cast<double>(x) / (w - 1), v = static_cast<double>(y) / (h - 1);
      f.planes[0].at(x, y) = static_cast<std::uint16_t>(std::lround(max * (0.1 + 0.6 * u)));
      f.planes[1].at(x, y) = static_cast<std::uint16_t>(std::lround(max * (0.2 + 0.5 * v)));
      f.planes[2].at(x, y) =
          static_cast<std::uint16_t>(std::lround(max * (0.15 + 0.3 * u + 0.3 * v)));
    }
  return f;
}

TEST(Convert420, PlaneGeometry) {
  const Frame out = convert_rgb444_to_ycbcr420(smooth_gradient(64, 32));
  EXPECT_EQ(out.chroma, ChromaFormat::k420);
  EXPECT_EQ(out.model, ColorModel::kYcbcr);
  EXPECT_EQ(out.planes[0].width, 64);
  EXPECT_EQ(out.planes[1].width, 32);
  EXPECT_EQ(out.planes[1].height, 16);
  EXPECT_EQ(out.signalling.colour->matrix_coefficients, cicp::kMatrixBt2020Ncl);
  EXPECT_NO_THROW(out.validate());
}

TEST(Convert420, RejectsBadInput) {
  EXPECT_THROW(convert_rgb444_to_ycbcr420(smooth_gradient(63, 32)), ParameterError);
  Frame ycc = Frame::make(64, 32, 10, ChromaFormat::k420, ColorModel::kYcbcr, SignalRange::kNarrow);
  EXPECT_THROW(convert_rgb444_to_ycbcr420(ycc), ParameterError);
  EXPECT_THROW(convert_rgb444_to_ycbcr420(rgb_frame(64, 32, 8)), ParameterError);
  To420Params p;
  p.bit_depth = 17;
  EXPECT_THROW(convert_rgb444_to_ycbcr420(smooth_gradient(64, 32), p), ParameterError);
}

TEST(Convert420, SmoothGradientRoundTripAbove60dB) {
  const Frame src = smooth_gradient(256, 128, 12);
  for (auto range : {SignalRange::kNarrow, SignalRange::kFull}) {
    To420Params fwd;
    fwd.bit_depth = 12;
    fwd.range = range;
    To444Params inv;
    inv.bit_depth = 12;
    inv.range = SignalRange::kFull;
    const Frame back = convert_ycbcr420_to_rgb444(convert_rgb444_to_ycbcr420(src, fwd), inv);
    const FidelityReport r = roundtrip_fidelity(src, back);
    for (const auto& c : r.channels) EXPECT_GE(c.psnr_db, 60.0);
  }
}

TEST(Convert420, ConstantFramesWithinOneStep) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> code(0, 4095);
  for (int trial = 0; trial < 20; ++trial) {
    Frame src = rgb_frame(16, 8);
    const int r = code(rng), g = code(rng), b = code(rng);
    std::fill(src.planes[0].samples.begin(), src.planes[0].samples.end(), r);
    std::fill(src.planes[1].samples.begin(), src.planes[1].samples.end(), g);
    std::fill(src.planes[2].samples.begin(), src.planes[2].samples.end(), b);
    To420Params fwd;
    fwd.bit_depth = 12;
    To444Params inv;
    inv.bit_depth = 12;
    const Frame back = convert_ycbcr420_to_rgb444(convert_rgb444_to_ycbcr420(src, fwd), inv);
    const FidelityReport rep = roundtrip_fidelity(src, back);
    // One step of the 12-bit Y'CbCr intermediate, expressed as a full-range
    // RGB code, is at most a few codes once rounded by the matrix.
    for (int p = 0; p < 3; ++p)
      for (std::size_t i = 0; i < back.planes[p].samples.size(); ++i)
        EXPECT_EQ(back.planes[p].samples[i], back.planes[p].samples[0]);
    EXPECT_LE(rep.max_abs_error, 2.0 / 4095 + 1e-12);
  }
}

TEST(Convert420, GreyConstantIsLossless) {
  Frame src = rgb_frame(8, 8, 10);
  for (auto& p : src.planes) std::fill(p.samples.begin(), p.samples.end(), 600);
  To420Params fwd;
  To444Params inv;
  fwd.range = SignalRange::kFull;
  const Frame ycc = convert_rgb444_to_ycbcr420(src, fwd);
  EXPECT_EQ(ycc.planes[1].samples[0], 512);
  EXPECT_EQ(ycc.planes[2].samples[0], 512);
  EXPECT_TRUE(convert_ycbcr420_to_rgb444(ycc, inv).same_pixels(src));
}

TEST(Convert420, ChromaSitingIsType0) {
  // A single red column at x = 2 is co-sited with chroma sample 1 and
  // shared as a quarter weight by its neighbours.
  Frame src = rgb_frame(8, 2, 12);
  for (int y = 0; y < 2; ++y) src.planes[0].at(2, y) = 4095;
  To420Params fwd;
  fwd.bit_depth = 12;
  fwd.range = SignalRange::kFull;
  const Frame ycc = convert_rgb444_to_ycbcr420(src, fwd);
  const int centre = ycc.planes[2].at(1, 0) - 2048;
  const int left = ycc.planes[2].at(0, 0) - 2048;
  const int right = ycc.planes[2].at(2, 0) - 2048;
  EXPECT_GT(centre, 0);
  EXPECT_EQ(left, 0);
  EXPECT_EQ(right, 0);
  src = rgb_frame(8, 2, 12);
  for (int y = 0; y < 2; ++y) src.planes[0].at(3, y) = 4095;
  const Frame odd = convert_rgb444_to_ycbcr420(src, fwd);
  EXPECT_NEAR(odd.planes[2].at(1, 0) - 2048, centre / 2.0, 1.0);
  EXPECT_NEAR(odd.planes[2].at(2, 0) - 2048, centre / 2.0, 1.0);
}

TEST(Convert444, UsesSignalledMatrix) {
  Frame src = smooth_gradient(256, 128, 12);
  To420Params fwd;
  fwd.bit_depth = 12;
  fwd.matrix = MatrixCoefficients::kBt709;
  const Frame ycc = convert_rgb444_to_ycbcr420(src, fwd);
  EXPECT_EQ(frame_matrix(ycc), MatrixCoefficients::kBt709);
  To444Params inv;
  inv.bit_depth = 12;
  const Frame back = convert_ycbcr420_to_rgb444(ycc, inv);
  EXPECT_GE(roundtrip_fidelity(src, back).min_psnr_db(), 60.0);
}

TEST(Convert444, BatchMatchesSingle) {
  const Frame src = smooth_gradient(32, 16, 12);
  const auto batch = convert_rgb444_to_ycbcr420(std::vector<Frame>{src, src});
  ASSERT_EQ(batch.size(), 2u);
  EXPECT_TRUE(batch[0].same_pixels(convert_rgb444_to_ycbcr420(src)));
  EXPECT_TRUE(batch[1].same_pixels(batch[0]));
}

// Encodes linear BT.709 colours into a BT.2020/PQ RGB container.
Frame bt709_content_in_bt2020(const std::vector<Rgb>& linear709, double nits) {
  Frame f = rgb_frame(static_cast<int>(linear709.size()), 2, 12);
  const RgbSpaceConverter to2020(PrimariesSet::bt709(), PrimariesSet::bt2020());
  for (int x = 0; x < f.width; ++x) {
    const Rgb c = to2020(linear709[x]);
    const double v[3] = {c.r, c.g, c.b};
    for (int p = 0; p < 3; ++p)
      for (int y = 0; y < 2; ++y)
        f.planes[p].at(x, y) = static_cast<std::uint16_t>(
            quantize(pq_nits_to_signal(std::max(0.0, v[p]) * nits), 12, SignalRange::kFull,
                     PlaneKind::kLuma)
                .code);
  }
  return f;
}

TEST(GamutMarker, Bt709ContentHasNoFlags) {
  std::vector<Rgb> colours;
  for (double r : {0.0, 0.3, 1.0})
    for (double g : {0.0, 0.5, 1.0})
      for (double b : {0.0, 0.7, 1.0}) colours.push_back({r, g, b});
  for (double nits : {100.0, 1000.0, 4000.0}) {
    const Frame f = bt709_content_in_bt2020(colours, nits);
    EXPECT_EQ(gamut_marker(f, PrimariesSet::bt709(), 2e-3).flagged, 0u) << nits;
    EXPECT_EQ(gamut_marker(f, PrimariesSet::dci_p3_d65(), 2e-3).flagged, 0u) << nits;
    EXPECT_EQ(gamut_marker(f, PrimariesSet::bt2020(), 2e-3).flagged, 0u) << nits;
  }
}

TEST(GamutMarker, Bt2020PrimariesAllFlagged) {
  Frame f = rgb_frame(3, 2, 12);
  for (int p = 0; p < 3; ++p)
    for (int y = 0; y < 2; ++y) f.planes[p].at(p, y) = 3000;
  const auto m709 = gamut_marker(f, PrimariesSet::bt709());
  const auto mp3 = gamut_marker(f, PrimariesSet::dci_p3_d65());
  EXPECT_EQ(m709.flagged, 6u);
  EXPECT_DOUBLE_EQ(m709.fraction, 1.0);
  EXPECT_EQ(mp3.flagged, 6u);
  EXPECT_EQ(gamut_marker(f, PrimariesSet::bt2020()).flagged, 0u);
}

TEST(GamutMarker, NestingProperty) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> code(0, 4095);
  for (int trial = 0; trial < 10; ++trial) {
    Frame f = rgb_frame(32, 32, 12);
    for (auto& p : f.planes)
      for (auto& s : p.samples) s = static_cast<std::uint16_t>(code(rng));
    const auto a = gamut_marker(f, PrimariesSet::bt709());
    const auto b = gamut_marker(f, PrimariesSet::dci_p3_d65());
    for (std::size_t i = 0; i < a.mask.size(); ++i) {
      if (b.mask[i]) {
        EXPECT_TRUE(a.mask[i]) << "pixel " << i;
      }
    }
    EXPECT_LE(b.flagged, a.flagged);
  }
}

TEST(GamutMarker, RejectsNonPqFrames) {
  Frame f = rgb_frame(4, 2);
  f.signalling.colour->transfer_characteristics = cicp::kTransferBt709;
  EXPECT_THROW(gamut_marker(f, PrimariesSet::bt709()), UnsupportedSignalError);
  f.signalling.colour.reset();
  EXPECT_THROW(gamut_marker(f, PrimariesSet::bt709()), UnsupportedSignalError);
}

TEST(GamutMarker, WorksOnYcbcr420) {
  Frame src = rgb_frame(8, 8, 12);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) src.planes[1].at(x, y) = 3000;  // saturated BT.2020 green
  To420Params fwd;
  fwd.bit_depth = 12;
  const Frame ycc = convert_rgb444_to_ycbcr420(src, fwd);
  EXPECT_DOUBLE_EQ(gamut_marker(ycc, PrimariesSet::bt709()).fraction, 1.0);
}

TEST(NonlinearRgb, IdentityForRgbFrames) {
  const Frame f = smooth_gradient(8, 4, 12);
  const auto px = frame_to_nonlinear_rgb(f);
  ASSERT_EQ(px.size(), 32u);
  EXPECT_NEAR(px[5].r, f.planes[0].samples[5] / 4095.0, 1e-12);
  EXPECT_NEAR(px[5].b, f.planes[2].samples[5] / 4095.0, 1e-12);
}

}  // namespace
}  // namespace hdrcheck
