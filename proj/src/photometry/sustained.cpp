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

// Relative tolerance for "at the peak" when locating the peak temperature.
constexpr double kPeakTolerance = 1e-3;

std::vector<MeasurementSample> select_probe(const std::vector<MeasurementSample>& samples,
                                            std::optional<Probe> probe) {
  if (!probe) {
    std::set<Probe> present;
    for (const auto& s : samples) present.insert(s.probe);
    if (present.count(Probe::kWhite) || present.empty())
      probe = Probe::kWhite;
    else if (present.size() == 1)
      probe = *present.begin();
    else
      throw LogError("log mixes black and full probes; choose one");
  }
  std::vector<MeasurementSample> out;
  for (const auto& s : samples)
    if (s.probe == *probe) out.push_back(s);
  return out;
}

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  std::sort(v.begin(), v.end());
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

double time_above(const std::vector<MeasurementSample>& s, double threshold) {
  double total = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double dt = s[i].t - s[i - 1].t;
    if (dt <= 0) continue;
    const double a = s[i - 1].luminance, b = s[i].luminance;
    const bool ia = a >= threshold, ib = b >= threshold;
    if (ia && ib) {
      total += dt;
    } else if (ia != ib) {
      // Linear crossing inside the segment.
      const double f = (threshold - a) / (b - a);
      total += ia ? f * dt : (1 - f) * dt;
    }
  }
  return total;
}

SustainedReport analyze_sustained(const std::vector<MeasurementSample>& input,
                                  const SustainedParams& params) {
  for (std::size_t i = 1; i < input.size(); ++i)
    if (input[i].t < input[i - 1].t)
      throw LogError("timestamps decrease at sample " + std::to_string(i + 1));
  if (!(params.decay_fraction > 0 && params.decay_fraction < 1))
    throw ParameterError("decay fraction must be in (0, 1)");
  if (params.hold_s < 0) throw ParameterError("hold time must be non-negative");

  std::vector<MeasurementSample> s = select_probe(input, params.probe);
  if (s.size() < 2) throw LogError("sustained analysis needs at least two samples");
  std::optional<double> window;
  for (const auto& x : s) {
    if (!x.window_percent) continue;
    if (window && *window != *x.window_percent)
      throw LogError("sustained analysis expects a fixed window size");
    window = x.window_percent;
  }
  std::stable_sort(s.begin(), s.end(), [](const auto& a, const auto& b) {
    return a.t != b.t ? a.t < b.t : a.luminance < b.luminance;
  });
  const double t0 = s.front().t;
  for (auto& x : s) x.t -= t0;

  SustainedReport r;
  r.samples = s.size();
  r.duration = s.back().t;
  for (const auto& x : s) r.peak = std::max(r.peak, x.luminance);
  for (double th : params.thresholds) r.time_above[th] = time_above(s, th);

  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (it->luminance >= r.peak * (1 - kPeakTolerance)) {
      r.temperature_at_peak = it->temperature;
      break;
    }
  }

  double running = 0;
  for (std::size_t i = 0; i < s.size() && !r.decay_onset; ++i) {
    running = std::max(running, s[i].luminance);
    const double limit = params.decay_fraction * running;
    if (s[i].luminance >= limit) continue;
    if (s.back().t - s[i].t < params.hold_s) break;
    bool held = true;
    for (std::size_t j = i; j < s.size() && s[j].t <= s[i].t + params.hold_s; ++j) {
      if (s[j].luminance >= limit) {
        held = false;
        break;
      }
    }
    if (held) r.decay_onset = s[i].t;
  }

  const std::size_t tail = std::max<std::size_t>(1, (s.size() + 9) / 10);
  std::vector<double> last;
  for (std::size_t i = s.size() - tail; i < s.size(); ++i) last.push_back(s[i].luminance);
  r.stabilized = median(last);
  return r;
}

SustainedReport analyze_sustained(const MeasurementLog& log, const SustainedParams& params) {
  return analyze_sustained(log.samples, params);
}

}  // namespace hdrcheck
