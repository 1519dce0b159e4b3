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
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/verify.h"

namespace hdrcheck {

namespace {

void check_same_format(const SignalStats& a, const SignalStats& b) {
  if (a.bit_depth != b.bit_depth || a.range != b.range || a.model != b.model)
    throw ParameterError("cannot combine statistics of frames with different formats");
}

}  // namespace

SignalStats& SignalStats::merge(const SignalStats& other) {
  if (other.frames == 0) return *this;
  if (frames == 0) return *this = other;
  check_same_format(*this, other);
  frames += other.frames;
  for (int i = 0; i < 3; ++i) {
    PlaneStats& p = planes[i];
    const PlaneStats& q = other.planes[i];
    if (q.count == 0) continue;
    if (p.count == 0) {
      p = q;
      continue;
    }
    p.min = std::min(p.min, q.min);
    p.max = std::max(p.max, q.max);
    p.count += q.count;
    p.sum += q.sum;
    p.below_nominal += q.below_nominal;
    p.above_nominal += q.above_nominal;
    for (std::size_t c = 0; c < p.histogram.size(); ++c) p.histogram[c] += q.histogram[c];
  }
  return *this;
}

SignalStats signal_stats(const Frame& frame) {
  frame.validate();
  SignalStats s;
  s.frames = 1;
  s.bit_depth = frame.bit_depth;
  s.range = frame.range;
  s.model = frame.model;
  for (int i = 0; i < 3; ++i) {
    PlaneStats& p = s.planes[i];
    const auto& samples = frame.planes[i].samples;
    p.histogram.assign(static_cast<std::size_t>(frame.max_code()) + 1, 0);
    if (samples.empty()) continue;
    const PlaneKind kind = frame.plane_kind(i);
    const bool narrow = frame.range == SignalRange::kNarrow;
    const int lo = nominal_min_code(frame.bit_depth, frame.range, kind);
    const int hi = nominal_max_code(frame.bit_depth, frame.range, kind);
    p.min = samples.front();
    p.max = samples.front();
    for (std::uint16_t v : samples) {
      p.min = std::min<int>(p.min, v);
      p.max = std::max<int>(p.max, v);
      p.sum += v;
      ++p.histogram[v];
      if (narrow) {
        if (v < lo) ++p.below_nominal;
        if (v > hi) ++p.above_nominal;
      }
    }
    p.count = samples.size();
  }
  return s;
}

SignalStats signal_stats(const std::vector<Frame>& frames) {
  if (frames.empty()) throw ParameterError("signal statistics need at least one frame");
  SignalStats total;
  for (const Frame& f : frames) total.merge(signal_stats(f));
  return total;
}

}  // namespace hdrcheck
