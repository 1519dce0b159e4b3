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

#ifndef HDRCHECK_PANELSIM_H
#define HDRCHECK_PANELSIM_H

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdrcheck/patterns.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {

enum class Technology { kOled, kLcd, kReference };
const char* to_string(Technology t);

struct AblCurve {
  double flat_until_percent = 10;  // S0
  double exponent = 0;             // gamma
  double floor_nits = 0;
};

// One-pole thermal state driven by the displayed optical load.
struct ThermalModel {
  double k_heat = 0;  // degC/s per unit load
  double k_cool = 0.01;  // 1/s
  double t_ambient = 25;
  double t_knee = 100;
  double derate_alpha = 0;  // 1/degC above the knee
  double derate_floor = 1;  // lowest thermal multiplier
};

struct DimmingModel {
  int zones_x = 1;
  int zones_y = 1;
  double leak_fraction = 0;
  double black_floor = 0;  // nits
  // The zone grid is an assumption rather than a measured property.
  bool zones_placeholder = false;
};

struct PanelProfile {
  std::string name;
  Technology technology = Technology::kReference;
  double peak_small_window = 1000;  // nits
  AblCurve abl;
  ThermalModel thermal;
  DimmingModel dimming;
  std::string notes;

  // Throws ValidationError naming the offending field.
  void validate() const;
  // Static ABL multiplier for a white-area share in percent.
  double abl_multiplier(double s_eff_percent) const;
  double thermal_multiplier(double temperature) const;
};

inline constexpr int kProfileSchemaVersion = 1;

nlohmann::json to_json(const PanelProfile& p);
PanelProfile profile_from_json(const nlohmann::json& j);
PanelProfile load_profile(const std::filesystem::path& path);
void save_profile(const PanelProfile& p, const std::filesystem::path& path);

struct ProbeSpec {
  std::string id;
  Rect region;
  Probe kind = Probe::kWhite;
};

// White probe: small centred square. Black probe: same size near the
// top-left corner, away from centred windows.
std::vector<ProbeSpec> default_probes(const Geometry& geom);

struct SimOptions {
  double dt = 0.1;
  std::uint64_t seed = 0;
  // Relative Gaussian measurement noise; 0 for an exact log.
  double noise_fraction = 0;
};

// Steps the playlist at dt cadence. Per step the frame's mean linear light
// A (1 = every pixel at 10000 nits) sets the ABL multiplier with
// S_eff = 100 A and drives the thermal state with the previous step's
// multipliers. White probes are absent while their region shows only black.
// Throws ParameterError for a probe outside the frame, a non-positive dt or
// an empty playlist.
MeasurementLog simulate(const Playlist& playlist, const PanelProfile& profile,
                        const std::vector<ProbeSpec>& probes, const SimOptions& options = {});

}  // namespace hdrcheck

#endif  // HDRCHECK_PANELSIM_H
