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

#include <algorithm>
#include <cmath>
#include <limits>

#include "hdrcheck/error.h"
#include "hdrcheck/verify.h"

namespace hdrcheck {

namespace {

double normalized(const Frame& f, int code) {
  if (f.range == SignalRange::kFull) return static_cast<double>(code) / f.max_code();
  return dequantize(CodeValue{code, f.bit_depth, f.range}, PlaneKind::kLuma);
}

}  // namespace

bool FidelityReport::identical() const {
  return std::all_of(channels.begin(), channels.end(),
                     [](const ChannelFidelity& c) { return c.identical; });
}

double FidelityReport::min_psnr_db() const {
  double m = std::numeric_limits<double>::infinity();
  for (const ChannelFidelity& c : channels) m = std::min(m, c.psnr_db);
  return m;
}

FidelityReport roundtrip_fidelity(const Frame& reference, const Frame& reconstructed) {
  for (const Frame* f : {&reference, &reconstructed})
    if (f->model != ColorModel::kRgb || f->chroma != ChromaFormat::k444)
      throw ParameterError("fidelity comparison expects RGB 4:4:4 frames");
  if (reference.width != reconstructed.width || reference.height != reconstructed.height)
    throw ParameterError("fidelity comparison needs equal geometry, got " +
                         std::to_string(reference.width) + "x" + std::to_string(reference.height) +
                         " and " + std::to_string(reconstructed.width) + "x" +
                         std::to_string(reconstructed.height));

  const std::size_t n = reference.planes[0].samples.size();
  FidelityReport r;
  std::array<double, 3> sq{};
  double distance = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double d2 = 0;
    for (int c = 0; c < 3; ++c) {
      const double a = normalized(reference, reference.planes[c].samples[i]);
      const double b = normalized(reconstructed, reconstructed.planes[c].samples[i]);
      const double e = std::fabs(a - b);
      sq[c] += e * e;
      r.channels[c].max_abs_error = std::max(r.channels[c].max_abs_error, e);
      const double dl = pq_signal_to_nits(a) - pq_signal_to_nits(b);
      d2 += dl * dl;
    }
    distance += std::sqrt(d2);
  }
  for (int c = 0; c < 3; ++c) {
    ChannelFidelity& ch = r.channels[c];
    ch.mse = n ? sq[c] / n : 0;
    ch.identical = ch.mse == 0;
    ch.psnr_db = ch.identical ? std::numeric_limits<double>::infinity()
                              : 10.0 * std::log10(1.0 / ch.mse);
    r.max_abs_error = std::max(r.max_abs_error, ch.max_abs_error);
  }
  r.mean_linear_distance_nits = n ? distance / n : 0;
  return r;
}

}  // namespace hdrcheck
