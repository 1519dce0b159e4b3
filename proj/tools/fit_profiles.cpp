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

// Derives the shipped panel profiles from published observations and
// writes them as JSON. Each closed-form parameter comes from the ABL law;
// the thermal gains are bisected against the simulator itself, so the
// shipped files reproduce their targets on the default geometry.
//
//   fit_profiles [output_dir] [WxH]

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>

#include "hdrcheck/panelsim.h"
#include "hdrcheck/photometry.h"

using namespace hdrcheck;

namespace {

// Exponent placing L(s_cross) = level for L(S) = peak (S0/S)^gamma.
double abl_exponent(double peak, double level, double s0, double s_cross) {
  return std::log(peak / level) / std::log(s_cross / s0);
}

SustainedReport run_sustained(const PanelProfile& p, const Geometry& g) {
  SweepRequest r;
  r.kind = SweepKind::kSustained;
  const Playlist pl = build_playlist(r, g);
  return analyze_sustained(simulate(pl, p, default_probes(g)), {});
}

// Smallest-error k_heat in [lo, hi] for a quantity that falls as k_heat grows.
double bisect(double lo, double hi, double target, const std::function<double(double)>& f) {
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > target) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double round_sig(double v, int digits) {
  if (v == 0) return 0;
  const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::fabs(v))));
  return std::round(v * scale) / scale;
}

PanelProfile reference() {
  PanelProfile p;
  p.name = "sony-bvm-x300";
  p.technology = Technology::kReference;
  p.peak_small_window = 1041;
  p.abl = {10, round_sig(abl_exponent(1041, 1000, 10, 14), 6), 0};
  p.thermal = {0, 0.01, 25, 100, 0, 1};
  p.dimming = {1, 1, 0, 0, false};
  p.notes =
      "Reference monitor. Peak 1041 nits; 1000 nits held up to a 13% window, crossing placed "
      "between the 13% and 15% steps. No thermal derating.";
  return p;
}

PanelProfile lcd(const Geometry& g) {
  PanelProfile p;
  p.name = "sony-kd-75zd9";
  p.technology = Technology::kLcd;
  p.peak_small_window = 1817;
  p.abl = {10, round_sig(abl_exponent(1817, 1500, 10, 23.5), 6), 0};
  p.thermal = {0, 1.0 / 300, 25, 45, 0.02, 0.5};
  p.dimming = {16, 9, 0.15, 0.05, true};
  p.thermal.k_heat = round_sig(bisect(0.1, 500, 180, [&](double k) {
                                 PanelProfile q = p;
                                 q.thermal.k_heat = k;
                                 return run_sustained(q, g).time_above.at(1500);
                               }),
                               6);
  p.notes =
      "LCD with full-array local dimming. Peak 1817 nits; 1500 nits up to a 22% window, crossing "
      "placed between the 22% and 25% steps. k_heat fitted so a 1% window stays at or above 1500 "
      "nits for 180 s. The 16x9 zone grid is a placeholder, not a measured property.";
  return p;
}

PanelProfile oled(const Geometry& g) {
  PanelProfile p;
  p.name = "sony-a80j";
  p.technology = Technology::kOled;
  p.peak_small_window = 1050;
  p.abl = {3, round_sig(abl_exponent(1050, 900, 3, 6), 6), 150};
  p.thermal = {0, 1.0 / 400, 25, 55, 0.05, 0.3};
  p.dimming = {1, 1, 0, 0, false};
  p.thermal.k_heat = round_sig(bisect(0.1, 500, 100, [&](double k) {
                                 PanelProfile q = p;
                                 q.thermal.k_heat = k;
                                 return run_sustained(q, g).decay_onset.value_or(1e9);
                               }),
                               6);
  p.notes =
      "OLED. Peak 1050 nits; 900 nits up to a 5% window, crossing placed between the 5% and 7% "
      "steps. Derating starts at a 55 C panel temperature; k_heat fitted so a 1% window starts to "
      "decay at 100 s. Per-pixel emission, so no dimming leak.";
  return p;
}

void report(const PanelProfile& p, const Geometry& g) {
  const SustainedReport s = run_sustained(p, g);
  std::printf("%-14s k_heat %-10g peak %7.2f  above1500 %6.1f s  onset %s  T@peak %s\n",
              p.name.c_str(), p.thermal.k_heat, s.peak, s.time_above.at(1500),
              s.decay_onset ? std::to_string(*s.decay_onset).c_str() : "none",
              s.temperature_at_peak ? std::to_string(*s.temperature_at_peak).c_str() : "-");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "profiles";
    const Geometry g = parse_size(argc > 2 ? argv[2] : "3840x2160");
    std::filesystem::create_directories(dir);
    for (const PanelProfile& p : {reference(), lcd(g), oled(g)}) {
      save_profile(p, dir / (p.name + ".json"));
      report(p, g);
    }
  } catch (const std::exception& e) {
    std::cerr << "fit_profiles: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
