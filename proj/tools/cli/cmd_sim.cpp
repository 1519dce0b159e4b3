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

#include <ostream>

#include "common.h"
#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"
#include "hdrcheck/panelsim.h"
#include "hdrcheck/prng.h"

#ifndef HDRCHECK_PROFILES_DIR
#define HDRCHECK_PROFILES_DIR "profiles"
#endif

namespace hdrcheck::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string alias_of(const std::string& name) {
  if (name == "reference") return "sony-bvm-x300";
  if (name == "lcd") return "sony-kd-75zd9";
  if (name == "oled") return "sony-a80j";
  return name;
}

}  // namespace

fs::path resolve_profile(const std::string& name_or_path) {
  const fs::path direct(name_or_path);
  if (direct.has_extension() || name_or_path.find('/') != std::string::npos) {
    if (!fs::exists(direct)) throw ParameterError("profile not found: " + name_or_path);
    return direct;
  }
  const fs::path shipped = fs::path(HDRCHECK_PROFILES_DIR) / (alias_of(name_or_path) + ".json");
  if (!fs::exists(shipped)) throw ParameterError("unknown profile: " + name_or_path);
  return shipped;
}

std::vector<ProbeSpec> probes_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("probes", "must be an array");
  std::vector<ProbeSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "probes[" + std::to_string(i) + "]";
    const json& p = j[i];
    if (!p.is_object() || !p.contains("region") || !p["region"].is_array() ||
        p["region"].size() != 4)
      throw ValidationError(field + ".region", "must be [x, y, width, height]");
    ProbeSpec s;
    s.id = p.value("id", "probe" + std::to_string(i));
    const json& r = p["region"];
    for (const auto& v : r)
      if (!v.is_number_integer()) throw ValidationError(field + ".region", "must be integers");
    s.region = {r[0].get<int>(), r[1].get<int>(), r[2].get<int>(), r[3].get<int>()};
    const auto kind = probe_from_name(p.value("kind", "white"));
    if (!kind) throw ValidationError(field + ".kind", "must be white, black or full");
    s.kind = *kind;
    out.push_back(s);
  }
  return out;
}

void add_sim_command(CLI::App& app, Context& ctx) {
  CLI::App* sub = app.add_subcommand("sim", "Simulate photometer logs for a panel profile");
  struct Args {
    std::string profile = "reference";
    std::string playlist;
    std::string sweep;
    std::vector<double> values;
    double entry_duration = 3;
    double lead_in = 300;
    double sustained_duration = 600;
    double sustained_window = 1;
    std::string size = "3840x2160";
    std::string probes;
    std::string output;
    SimOptions options;
  };
  auto a = std::make_shared<Args>();
  sub->add_option("--profile", a->profile, "Shipped profile name or alias, or a JSON path")
      ->capture_default_str();
  auto* pl = sub->add_option("--playlist", a->playlist, "Playlist JSON");
  sub->add_option("--sweep", a->sweep, "Build a playlist: night-sky, window, ebu-window, sustained")
      ->check(CLI::IsMember({"night-sky", "window", "ebu-window", "sustained"}))
      ->excludes(pl);
  sub->add_option("--values", a->values, "Percentages for --sweep");
  sub->add_option("--entry-duration", a->entry_duration)->capture_default_str();
  sub->add_option("--lead-in", a->lead_in)->capture_default_str();
  sub->add_option("--sustained-duration", a->sustained_duration)->capture_default_str();
  sub->add_option("--sustained-window", a->sustained_window)->capture_default_str();
  sub->add_option("--size", a->size, "Frame size for --sweep")->capture_default_str();
  sub->add_option("--dt", a->options.dt, "Step in seconds")->capture_default_str();
  sub->add_option("--noise", a->options.noise_fraction, "Relative measurement noise")
      ->capture_default_str();
  sub->add_option("--probes", a->probes, "Probe JSON; default centred white and corner black");
  sub->add_option("-o,--output", a->output, "Log CSV path");
  sub->callback([&ctx, a, sub] {
    ctx.action = [&ctx, a, sub] {
      const PanelProfile profile = load_profile(resolve_profile(a->profile));
      Playlist playlist;
      if (!a->playlist.empty()) {
        playlist = playlist_from_json(read_json_file(a->playlist));
      } else if (!a->sweep.empty()) {
        SweepRequest r;
        r.kind = *sweep_kind_from_name(a->sweep);
        if (sub->count("--values")) r.values = a->values;
        r.entry_duration_s = a->entry_duration;
        r.lead_in_black_s = a->lead_in;
        r.sustained_duration_s = a->sustained_duration;
        r.sustained_window_percent = a->sustained_window;
        r.seed = derive_seed(ctx.seed, "playlist");
        playlist = build_playlist(r, parse_size(a->size));
      } else {
        throw ParameterError("one of --playlist or --sweep is required");
      }
      const std::vector<ProbeSpec> probes =
          a->probes.empty() ? default_probes(playlist.geometry)
                            : probes_from_json(read_json_file(a->probes));
      SimOptions options = a->options;
      options.seed = derive_seed(ctx.seed, "sim");
      const MeasurementLog log = simulate(playlist, profile, probes, options);
      const fs::path path = ctx.output_path(
          a->output.empty() ? profile.name + "." + playlist.name + ".csv" : a->output);
      write_measurement_log(log, path);
      *ctx.out << "log: " << path.string() << " (" << log.samples.size() << " samples, profile "
               << profile.name << ")\n";
      return kExitOk;
    };
  });
}

}  // namespace hdrcheck::cli
