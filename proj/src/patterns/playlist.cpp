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
#include <sstream>
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/patterns.h"
#include "hdrcheck/prng.h"

namespace hdrcheck {

using nlohmann::json;

namespace {

std::string percent_label(const char* prefix, double v) {
  std::ostringstream os;
  os << prefix << v << "%";
  return os.str();
}

}  // namespace

double Playlist::total_duration() const {
  double t = 0;
  for (const auto& e : entries) t += e.lead_in_black_s + e.duration_s;
  return t;
}

std::optional<SweepKind> sweep_kind_from_name(const std::string& name) {
  if (name == "night-sky") return SweepKind::kNightSky;
  if (name == "window" || name == "window-sweep") return SweepKind::kWindow;
  if (name == "ebu-window" || name == "ebu") return SweepKind::kEbuWindow;
  if (name == "sustained") return SweepKind::kSustained;
  return std::nullopt;
}

Playlist build_playlist(const SweepRequest& request, const Geometry& geom) {
  geom.validate();
  if (!(request.entry_duration_s > 0.0)) throw ParameterError("entry duration must be > 0");
  if (!(request.lead_in_black_s >= 0.0)) throw ParameterError("lead-in must be >= 0");

  auto values_or = [&](auto const& defaults) {
    if (request.values) {
      if (request.values->empty()) throw ParameterError("sweep value set is empty");
      return *request.values;
    }
    return std::vector<double>(defaults.begin(), defaults.end());
  };

  Playlist p;
  p.geometry = geom;
  switch (request.kind) {
    case SweepKind::kNightSky: {
      p.name = "night-sky-sweep";
      for (double v : values_or(kNightSkyPercentages)) {
        NightSkySpec s{v, std::nullopt, derive_seed(request.seed, percent_label("night-sky/", v))};
        p.entries.push_back({PatternSpec{s, request.format, std::nullopt},
                             request.entry_duration_s, request.lead_in_black_s,
                             percent_label("night-sky ", v)});
      }
      break;
    }
    case SweepKind::kWindow:
    case SweepKind::kEbuWindow: {
      const bool ebu = request.kind == SweepKind::kEbuWindow;
      p.name = ebu ? "ebu-window-sweep" : "window-sweep";
      const auto values = ebu ? values_or(kEbuWindowPercentages) : values_or(kWindowSweepPercentages);
      for (double v : values) {
        p.entries.push_back({PatternSpec{WhiteWindowSpec{v, std::nullopt}, request.format,
                                         std::nullopt},
                             request.entry_duration_s, request.lead_in_black_s,
                             percent_label("window ", v)});
      }
      break;
    }
    case SweepKind::kSustained: {
      if (!(request.sustained_duration_s > 0.0))
        throw ParameterError("sustained duration must be > 0");
      p.name = "sustained";
      p.entries.push_back(
          {PatternSpec{WhiteWindowSpec{request.sustained_window_percent, std::nullopt},
                       request.format, std::nullopt},
           request.sustained_duration_s, 0.0,
           percent_label("sustained window ", request.sustained_window_percent)});
      break;
    }
  }
  for (const auto& e : p.entries) {
    // Surface bad percentages at build time rather than at generation.
    if (const auto* n = std::get_if<NightSkySpec>(&e.spec.variant);
        n && !(n->percent_white > 0 && n->percent_white <= 100))
      throw ParameterError("night-sky percentage must be in (0, 100]");
    if (const auto* w = std::get_if<WhiteWindowSpec>(&e.spec.variant);
        w && !(w->area_percent > 0 && w->area_percent <= 100))
      throw ParameterError("window percentage must be in (0, 100]");
  }
  return p;
}

json to_json(const Playlist& p) {
  json entries = json::array();
  for (const auto& e : p.entries)
    entries.push_back({{"spec", to_json(e.spec)},
                       {"duration_s", e.duration_s},
                       {"lead_in_black_s", e.lead_in_black_s},
                       {"label", e.label}});
  return {{"schema", "hdrcheck.playlist"},
          {"schema_version", 1},
          {"name", p.name},
          {"geometry", to_json(p.geometry)},
          {"entries", entries}};
}

Playlist playlist_from_json(const json& j) {
  Playlist p;
  try {
    if (j.at("schema_version").get<int>() != 1)
      throw ParameterError("unsupported playlist schema version");
    p.name = j.at("name").get<std::string>();
    p.geometry = geometry_from_json(j.at("geometry"));
    for (const auto& e : j.at("entries")) {
      PlaylistEntry entry;
      entry.spec = pattern_spec_from_json(e.at("spec"));
      entry.duration_s = e.at("duration_s").get<double>();
      entry.lead_in_black_s = e.value("lead_in_black_s", 0.0);
      entry.label = e.value("label", "");
      if (!(entry.duration_s > 0)) throw ParameterError("playlist entry duration must be > 0");
      p.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid playlist: ") + e.what());
  }
  if (p.entries.empty()) throw ParameterError("playlist has no entries");
  return p;
}

}  // namespace hdrcheck
