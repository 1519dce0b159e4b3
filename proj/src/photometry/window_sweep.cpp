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
#include <sstream>

#include "hdrcheck/error.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {

namespace {

// Plateau medians of one window size that disagree by more than this
// fraction raise a warning.
constexpr double kDuplicateTolerance = 0.05;

}  // namespace

double steady_state(std::vector<double> values) {
  if (values.empty()) throw ParameterError("steady state of an empty plateau");
  std::vector<double> tail(values.begin() + values.size() / 2, values.end());
  std::sort(tail.begin(), tail.end());
  const std::size_t n = tail.size();
  return n % 2 ? tail[n / 2] : 0.5 * (tail[n / 2 - 1] + tail[n / 2]);
}

std::optional<double> WindowSweepReport::max_window_at(double level) const {
  std::optional<double> best;
  for (const auto& [s, l] : curve)
    if (l >= level) best = s;
  return best;
}

WindowSweepReport analyze_window_sweep(const MeasurementLog& log) {
  validate_log(log);
  // Consecutive white samples sharing a window size form a plateau.
  std::map<double, std::vector<double>> plateaus;
  std::optional<double> current;
  std::vector<double> values;
  auto flush = [&] {
    if (current && !values.empty()) plateaus[*current].push_back(steady_state(values));
    values.clear();
  };
  for (const auto& s : log.samples) {
    if (s.probe != Probe::kWhite) continue;
    if (!s.window_percent) {
      flush();
      current.reset();
      continue;
    }
    if (!current || *current != *s.window_percent) {
      flush();
      current = s.window_percent;
    }
    values.push_back(s.luminance);
  }
  flush();
  if (plateaus.size() < 4)
    throw LogError("window sweep needs at least four window sizes, found " +
                   std::to_string(plateaus.size()));

  WindowSweepReport r;
  for (const auto& [s, medians] : plateaus) {
    const auto [lo, hi] = std::minmax_element(medians.begin(), medians.end());
    if (*hi > 0 && (*hi - *lo) / *hi > kDuplicateTolerance) {
      std::ostringstream msg;
      msg << "window " << s << "% measured " << medians.size()
          << " times with medians differing by more than 5%";
      r.warnings.push_back(msg.str());
    }
    double sum = 0;
    for (double m : medians) sum += m;
    r.curve[s] = sum / medians.size();
    r.peak = std::max(r.peak, r.curve[s]);
  }

  std::vector<std::pair<double, double>> pts(r.curve.begin(), r.curve.end());
  r.knee = pts.back().first;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    if (pts[i].second > pts[i + 1].second && pts[i + 1].second > pts[i + 2].second) {
      r.knee = pts[i].first;
      break;
    }
  }
  return r;
}

}  // namespace hdrcheck
