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

#include "hdrcheck/error.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {

namespace {

struct ExpFit {
  double ambient = 0;
  double amplitude = 0;
  double sse = 0;
};

// For fixed tau the model is linear in (ambient, amplitude).
ExpFit fit_fixed_tau(const std::vector<TemperatureSample>& s, double tau) {
  const double t0 = s.front().t;
  double n = 0, su = 0, suu = 0, sy = 0, suy = 0;
  for (const auto& p : s) {
    const double u = std::exp(-(p.t - t0) / tau);
    n += 1;
    su += u;
    suu += u * u;
    sy += p.temperature;
    suy += u * p.temperature;
  }
  const double det = n * suu - su * su;
  ExpFit f;
  if (std::fabs(det) < 1e-300) {
    f.ambient = sy / n;
  } else {
    f.amplitude = (n * suy - su * sy) / det;
    f.ambient = (sy - f.amplitude * su) / n;
  }
  for (const auto& p : s) {
    const double e = p.temperature - (f.ambient + f.amplitude * std::exp(-(p.t - t0) / tau));
    f.sse += e * e;
  }
  return f;
}

// Golden-section search on log(tau) around the best grid point.
double best_tau(const std::vector<TemperatureSample>& s) {
  const double span = s.back().t - s.front().t;
  double lo = std::log(span / 1000), hi = std::log(span * 100);
  const int kGrid = 200;
  double best = lo, best_sse = INFINITY;
  for (int i = 0; i <= kGrid; ++i) {
    const double lt = lo + (hi - lo) * i / kGrid;
    const double sse = fit_fixed_tau(s, std::exp(lt)).sse;
    if (sse < best_sse) {
      best_sse = sse;
      best = lt;
    }
  }
  const double step = (hi - lo) / kGrid;
  double a = best - step, b = best + step;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = fit_fixed_tau(s, std::exp(c)).sse, fd = fit_fixed_tau(s, std::exp(d)).sse;
  for (int i = 0; i < 100; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = fit_fixed_tau(s, std::exp(c)).sse;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = fit_fixed_tau(s, std::exp(d)).sse;
    }
  }
  return std::exp(0.5 * (a + b));
}

}  // namespace

const char* to_string(CooloffStatus s) {
  switch (s) {
    case CooloffStatus::kSafe: return "safe";
    case CooloffStatus::kWait: return "wait";
    case CooloffStatus::kNotCooling: return "not cooling";
    case CooloffStatus::kUnreachable: return "unreachable";
  }
  return "?";
}

CooloffReport cooloff_recommendation(const std::vector<TemperatureSample>& series, double t_safe) {
  if (series.size() < 2) throw LogError("cool-off needs at least two temperature samples");
  for (std::size_t i = 1; i < series.size(); ++i)
    if (series[i].t < series[i - 1].t)
      throw LogError("temperature timestamps decrease at sample " + std::to_string(i + 1));

  CooloffReport r;
  r.last_temperature = series.back().temperature;
  if (r.last_temperature <= t_safe) {
    r.status = CooloffStatus::kSafe;
    return r;
  }

  std::size_t peak = 0;
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series[i].temperature >= series[peak].temperature) peak = i;
  std::vector<TemperatureSample> seg(series.begin() + peak, series.end());
  r.segment_samples = seg.size();
  if (seg.size() < 2 || seg.back().temperature >= seg.front().temperature ||
      seg.back().t <= seg.front().t) {
    r.status = CooloffStatus::kNotCooling;
    return r;
  }

  if (seg.size() == 2) {
    // Two points only: straight-line extrapolation.
    const double slope = (seg[1].temperature - seg[0].temperature) / (seg[1].t - seg[0].t);
    r.status = CooloffStatus::kWait;
    r.wait_s = (r.last_temperature - t_safe) / -slope;
    return r;
  }

  const double tau = best_tau(seg);
  const ExpFit fit = fit_fixed_tau(seg, tau);
  r.tau_s = tau;
  r.ambient = fit.ambient;
  if (fit.ambient >= t_safe || fit.amplitude <= 0) {
    r.status = CooloffStatus::kUnreachable;
    return r;
  }
  const double excess =
      fit.amplitude * std::exp(-(seg.back().t - seg.front().t) / tau);
  r.status = CooloffStatus::kWait;
  r.wait_s = excess > t_safe - fit.ambient ? tau * std::log(excess / (t_safe - fit.ambient)) : 0;
  return r;
}

CooloffReport cooloff_recommendation(const MeasurementLog& log, double t_safe) {
  std::vector<TemperatureSample> series;
  for (const auto& s : log.samples)
    if (s.temperature) series.push_back({s.t, *s.temperature});
  return cooloff_recommendation(series, t_safe);
}

}  // namespace hdrcheck
