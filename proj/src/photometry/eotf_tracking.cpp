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
#include <set>

#include "hdrcheck/error.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {

namespace {

void accumulate(DeviationSummary& s, double pct) {
  s.max_abs_pct = std::max(s.max_abs_pct, std::fabs(pct));
  s.mean_abs_pct += std::fabs(pct);
  s.mean_pct += pct;
  ++s.count;
}

void finish(DeviationSummary& s) {
  if (!s.count) return;
  s.mean_abs_pct /= s.count;
  s.mean_pct /= s.count;
}

}  // namespace

EotfReport analyze_eotf_tracking(const std::vector<EotfSample>& samples, const EotfParams& p) {
  if (p.bit_depth < 8 || p.bit_depth > 16) throw ParameterError("bit depth must be in [8, 16]");
  const int lo = nominal_min_code(p.bit_depth, p.range, PlaneKind::kLuma);
  const int hi = nominal_max_code(p.bit_depth, p.range, PlaneKind::kLuma);
  std::set<int> distinct;
  for (const auto& s : samples) {
    if (s.code < lo || s.code > hi)
      throw ParameterError("code " + std::to_string(s.code) + " outside the legal " +
                           to_string(p.range) + " range [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    if (!(s.luminance >= 0)) throw ParameterError("luminance must be non-negative");
    distinct.insert(s.code);
  }
  if (distinct.size() < 3)
    throw ParameterError("EOTF tracking needs at least three distinct code levels, found " +
                         std::to_string(distinct.size()));

  EotfReport r;
  for (const auto& s : samples) {
    EotfPoint pt;
    pt.code = s.code;
    pt.measured = s.luminance;
    pt.ideal = pq_signal_to_nits(
        dequantize(CodeValue{s.code, p.bit_depth, p.range}, PlaneKind::kLuma));
    pt.beyond_anchor = pt.ideal > p.peak_anchor;
    if (pt.ideal > 0) pt.deviation_pct = 100.0 * (pt.measured - pt.ideal) / pt.ideal;
    if (pt.deviation_pct && !pt.beyond_anchor) {
      accumulate(r.all, *pt.deviation_pct);
      accumulate(pt.ideal < p.split_nits ? r.low : r.high, *pt.deviation_pct);
    }
    r.points.push_back(pt);
  }
  finish(r.all);
  finish(r.low);
  finish(r.high);
  return r;
}

EotfReport analyze_eotf_tracking(const MeasurementLog& log, const EotfParams& params) {
  std::vector<EotfSample> samples;
  for (const auto& s : log.samples)
    if (s.code_level) samples.push_back({*s.code_level, s.luminance});
  return analyze_eotf_tracking(samples, params);
}

}  // namespace hdrcheck
