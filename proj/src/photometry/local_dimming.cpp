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
#include <set>

#include "hdrcheck/error.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ParameterError("fit needs equally many x and y values");
  const std::size_t n = x.size();
  if (std::set<double>(x.begin(), x.end()).size() < 2)
    throw ParameterError("fit needs at least two distinct x values");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  // Relative cut-off so float noise on a constant series does not read as
  // correlation.
  const double scale = std::fmax(my * my, 1e-300) * n;
  f.r = syy > 1e-24 * scale ? sxy / std::sqrt(sxx * syy) : 0.0;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (f.intercept + f.slope * x[i]);
    ss += e * e;
  }
  f.residual_rms = std::sqrt(ss / n);
  return f;
}

const char* to_string(DimmingClass c) { return c == DimmingClass::kPoor ? "poor" : "good"; }

DimmingClass classify_dimming(const DimmingReport& r, const DimmingParams& p) {
  return r.normalized_black_slope > p.normalized_slope_threshold &&
                 r.black_fit.r > p.min_correlation
             ? DimmingClass::kPoor
             : DimmingClass::kGood;
}

DimmingReport analyze_local_dimming(const MeasurementLog& log, const DimmingParams& params) {
  validate_log(log);
  // Plateaus: consecutive samples of one probe at one percentage.
  std::map<double, std::vector<double>> black, white;
  struct Run {
    std::optional<double> p;
    Probe probe = Probe::kWhite;
    std::vector<double> values;
  };
  std::map<Probe, Run> runs;
  auto flush = [&](Run& run) {
    if (run.p && !run.values.empty() && run.probe != Probe::kFull)
      (run.probe == Probe::kBlack ? black : white)[*run.p].push_back(steady_state(run.values));
    run.values.clear();
    run.p.reset();
  };
  for (const auto& s : log.samples) {
    Run& run = runs[s.probe];
    run.probe = s.probe;
    if (!s.window_percent) {
      flush(run);
      continue;
    }
    if (run.p && *run.p != *s.window_percent) flush(run);
    run.p = s.window_percent;
    run.values.push_back(s.luminance);
  }
  for (auto& [probe, run] : runs) flush(run);

  DimmingReport r;
  auto mean = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return s / v.size();
  };
  for (const auto& [p, v] : black) {
    if (!white.count(p))
      throw LogError("night-sky " + std::to_string(p) + "% has a black probe but no white probe");
    r.black[p] = mean(v);
  }
  for (const auto& [p, v] : white) {
    if (!black.count(p))
      throw LogError("night-sky " + std::to_string(p) + "% has a white probe but no black probe");
    r.white[p] = mean(v);
  }
  if (r.black.size() < 3)
    throw LogError("local dimming analysis needs paired probes at three or more percentages");

  std::vector<double> x, yb, yw;
  for (const auto& [p, l] : r.black) {
    x.push_back(p);
    yb.push_back(l);
    yw.push_back(r.white.at(p));
    r.white_peak = std::max(r.white_peak, r.white.at(p));
  }
  r.black_fit = fit_line(x, yb);
  r.white_fit = fit_line(x, yw);
  r.normalized_black_slope = r.white_peak > 0 ? r.black_fit.slope / r.white_peak : 0;
  r.classification = classify_dimming(r, params);
  if (r.white_fit.slope < 0 && r.white_fit.r < -params.min_correlation)
    r.notes.push_back("white probe falls with white-pixel share, consistent with ABL");
  if (r.classification == DimmingClass::kPoor)
    r.notes.push_back("black level rises with white-pixel share (blooming)");
  return r;
}

}  // namespace hdrcheck
