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
#include "hdrcheck/media_io.h"
#include "hdrcheck/panelsim.h"

namespace hdrcheck {

using nlohmann::json;

namespace {

constexpr const char* kProfileSchema = "hdrcheck.panel-profile";

const json& field(const json& j, const std::string& prefix, const char* name) {
  const std::string path = prefix.empty() ? name : prefix + "." + name;
  if (!j.is_object()) throw ValidationError(prefix.empty() ? "<root>" : prefix, "expected an object");
  if (!j.contains(name)) throw ValidationError(path, "missing");
  return j.at(name);
}

template <typename T>
T get(const json& j, const std::string& prefix, const char* name) {
  const json& v = field(j, prefix, name);
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw ValidationError(prefix.empty() ? name : prefix + "." + name, "has the wrong type");
  }
}

template <typename T>
T get_or(const json& j, const std::string& prefix, const char* name, T fallback) {
  return j.contains(name) ? get<T>(j, prefix, name) : fallback;
}

void require(bool ok, const char* field_name, const std::string& what) {
  if (!ok) throw ValidationError(field_name, what);
}

}  // namespace

const char* to_string(Technology t) {
  switch (t) {
    case Technology::kOled: return "oled";
    case Technology::kLcd: return "lcd";
    case Technology::kReference: return "reference";
  }
  return "?";
}

void PanelProfile::validate() const {
  require(!name.empty(), "name", "must not be empty");
  require(std::isfinite(peak_small_window) && peak_small_window > 0 &&
              peak_small_window <= pq::kPeakNits,
          "peak_small_window", "must be in (0, 10000]");
  require(abl.floor_nits >= 0 && abl.floor_nits < peak_small_window, "abl.floor_nits",
          "must satisfy 0 <= floor < peak");
  require(abl.flat_until_percent > 0 && abl.flat_until_percent <= 100,
          "abl.flat_until_percent", "must be in (0, 100]");
  require(abl.exponent >= 0 && std::isfinite(abl.exponent), "abl.exponent",
          "must be non-negative");
  require(thermal.k_heat >= 0, "thermal.k_heat", "must be non-negative");
  require(thermal.k_cool > 0, "thermal.k_cool", "must be positive");
  require(std::isfinite(thermal.t_ambient), "thermal.t_ambient", "must be finite");
  require(std::isfinite(thermal.t_knee), "thermal.t_knee", "must be finite");
  require(thermal.derate_alpha >= 0, "thermal.derate_alpha", "must be non-negative");
  require(thermal.derate_floor > 0 && thermal.derate_floor <= 1, "thermal.derate_floor",
          "must be in (0, 1]");
  require(dimming.zones_x >= 1, "dimming.zones_x", "must be at least 1");
  require(dimming.zones_y >= 1, "dimming.zones_y", "must be at least 1");
  require(dimming.leak_fraction >= 0 && dimming.leak_fraction <= 1, "dimming.leak_fraction",
          "must be in [0, 1]");
  require(dimming.black_floor >= 0, "dimming.black_floor", "must be non-negative");
}

double PanelProfile::abl_multiplier(double s_eff) const {
  if (s_eff <= abl.flat_until_percent) return 1.0;
  const double m = std::pow(abl.flat_until_percent / s_eff, abl.exponent);
  return std::max(m, abl.floor_nits / peak_small_window);
}

double PanelProfile::thermal_multiplier(double temperature) const {
  const double m = 1.0 - thermal.derate_alpha * std::max(temperature - thermal.t_knee, 0.0);
  return std::clamp(m, thermal.derate_floor, 1.0);
}

json to_json(const PanelProfile& p) {
  return {{"schema", kProfileSchema},
          {"schema_version", kProfileSchemaVersion},
          {"name", p.name},
          {"technology", to_string(p.technology)},
          {"peak_small_window", p.peak_small_window},
          {"abl",
           {{"flat_until_percent", p.abl.flat_until_percent},
            {"exponent", p.abl.exponent},
            {"floor_nits", p.abl.floor_nits}}},
          {"thermal",
           {{"k_heat", p.thermal.k_heat},
            {"k_cool", p.thermal.k_cool},
            {"t_ambient", p.thermal.t_ambient},
            {"t_knee", p.thermal.t_knee},
            {"derate_alpha", p.thermal.derate_alpha},
            {"derate_floor", p.thermal.derate_floor}}},
          {"dimming",
           {{"zones_x", p.dimming.zones_x},
            {"zones_y", p.dimming.zones_y},
            {"leak_fraction", p.dimming.leak_fraction},
            {"black_floor", p.dimming.black_floor},
            {"zones_placeholder", p.dimming.zones_placeholder}}},
          {"notes", p.notes}};
}

PanelProfile profile_from_json(const json& j) {
  if (get<std::string>(j, "", "schema") != kProfileSchema)
    throw ValidationError("schema", "expected '" + std::string(kProfileSchema) + "'");
  const int version = get<int>(j, "", "schema_version");
  if (version != kProfileSchemaVersion)
    throw ValidationError("schema_version", "unsupported version " + std::to_string(version));
  PanelProfile p;
  p.name = get<std::string>(j, "", "name");
  const auto tech = get<std::string>(j, "", "technology");
  if (tech == "oled")
    p.technology = Technology::kOled;
  else if (tech == "lcd")
    p.technology = Technology::kLcd;
  else if (tech == "reference")
    p.technology = Technology::kReference;
  else
    throw ValidationError("technology", "unknown value '" + tech + "'");
  p.peak_small_window = get<double>(j, "", "peak_small_window");

  const json& abl = field(j, "", "abl");
  p.abl.flat_until_percent = get<double>(abl, "abl", "flat_until_percent");
  p.abl.exponent = get<double>(abl, "abl", "exponent");
  p.abl.floor_nits = get<double>(abl, "abl", "floor_nits");

  const json& th = field(j, "", "thermal");
  p.thermal.k_heat = get<double>(th, "thermal", "k_heat");
  p.thermal.k_cool = get<double>(th, "thermal", "k_cool");
  p.thermal.t_ambient = get<double>(th, "thermal", "t_ambient");
  p.thermal.t_knee = get<double>(th, "thermal", "t_knee");
  p.thermal.derate_alpha = get<double>(th, "thermal", "derate_alpha");
  p.thermal.derate_floor = get<double>(th, "thermal", "derate_floor");

  const json& dim = field(j, "", "dimming");
  p.dimming.zones_x = get<int>(dim, "dimming", "zones_x");
  p.dimming.zones_y = get<int>(dim, "dimming", "zones_y");
  p.dimming.leak_fraction = get<double>(dim, "dimming", "leak_fraction");
  p.dimming.black_floor = get<double>(dim, "dimming", "black_floor");
  p.dimming.zones_placeholder = get_or<bool>(dim, "dimming", "zones_placeholder", false);
  p.notes = get_or<std::string>(j, "", "notes", "");
  p.validate();
  return p;
}

PanelProfile load_profile(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("profile is not valid JSON: ") + e.what(), e.byte);
  }
  return profile_from_json(j);
}

void save_profile(const PanelProfile& p, const std::filesystem::path& path) {
  p.validate();
  write_file_atomic(path, to_json(p).dump(2) + "\n");
}

}  // namespace hdrcheck
