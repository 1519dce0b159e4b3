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
#include <ostream>

#include "common.h"
#include "hdrcheck/error.h"
#include "hdrcheck/photometry.h"
#include "svg.h"

namespace hdrcheck::cli {

using nlohmann::json;

namespace {

struct LogInput {
  std::string path;
  std::string report;
  bool svg = false;
  bool csv = false;
};

void add_log_input(CLI::App* sub, LogInput& in) {
  sub->add_option("log", in.path, "Measurement log CSV")->required();
  sub->add_option("--report", in.report, "Report path");
  sub->add_flag("--svg", in.svg, "Also write an SVG plot");
  sub->add_flag("--csv", in.csv, "Also write the derived curve as CSV");
}

std::string stem_of(const LogInput& in, const std::string& what) {
  return std::filesystem::path(in.path).stem().string() + "." + what;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

int sustained(const Context& ctx, const LogInput& in, const SustainedParams& p) {
  const MeasurementLog log = read_measurement_log(in.path);
  const SustainedReport s = analyze_sustained(log, p);
  Report r;
  r.check = "analyze.sustained";
  r.inputs.push_back(in.path);
  json above = json::object();
  for (const auto& [th, sec] : s.time_above) above[short_number(th)] = sec;
  r.result = {{"peak_nits", s.peak},
              {"duration_s", s.duration},
              {"time_above_s", above},
              {"decay_onset_s", optional_json(s.decay_onset)},
              {"stabilized_nits", s.stabilized},
              {"temperature_at_peak_c", optional_json(s.temperature_at_peak)},
              {"samples", s.samples}};
  r.summary = "peak " + short_number(s.peak) + " nits, " +
              (s.decay_onset ? "decay onset at " + short_number(*s.decay_onset) + " s"
                             : std::string("no decay onset"));
  for (const auto& [th, sec] : s.time_above)
    r.findings.push_back(short_number(sec) + " s at or above " + short_number(th) + " nits");

  if (in.svg || in.csv) {
    const auto probe = p.probe.value_or(log.of(Probe::kWhite).empty() ? log.samples.front().probe
                                                                     : Probe::kWhite);
    PlotSeries series{"luminance", {}};
    std::string csv = "t_s,luminance_nits\n";
    for (const auto& x : log.of(probe)) {
      series.points.emplace_back(x.t, x.luminance);
      csv += short_number(x.t) + "," + short_number(x.luminance) + "\n";
    }
    if (in.svg)
      write_text(ctx, stem_of(in, "sustained.svg"),
                 svg_line_plot({"Sustained brightness", "time (s)", "luminance (nits)", {series}}));
    if (in.csv) write_text(ctx, stem_of(in, "sustained.csv"), csv);
  }
  return finish_report(ctx, r, in.report, in.path);
}

int sweep(const Context& ctx, const LogInput& in, const std::vector<double>& levels) {
  const MeasurementLog log = read_measurement_log(in.path);
  const WindowSweepReport s = analyze_window_sweep(log);
  Report r;
  r.check = "analyze.sweep";
  r.inputs.push_back(in.path);
  json curve = json::array();
  for (const auto& [w, l] : s.curve) curve.push_back({w, l});
  json at = json::object();
  for (double l : levels) at[short_number(l)] = optional_json(s.max_window_at(l));
  r.result = {{"curve", curve}, {"peak_nits", s.peak}, {"knee_percent", s.knee},
              {"max_window_at", at}};
  r.findings = s.warnings;
  r.status = s.warnings.empty() ? Status::kPass : Status::kWarn;
  r.summary = "peak " + short_number(s.peak) + " nits, knee at " + short_number(s.knee) + "%";
  for (double l : levels) {
    const auto w = s.max_window_at(l);
    r.findings.push_back(w ? "at least " + short_number(l) + " nits up to " + short_number(*w) +
                                 "% window"
                           : "never reaches " + short_number(l) + " nits");
  }
  if (in.svg || in.csv) {
    PlotSeries series{"steady state", {}};
    std::string csv = "window_pct,luminance_nits\n";
    for (const auto& [w, l] : s.curve) {
      series.points.emplace_back(w, l);
      csv += short_number(w) + "," + short_number(l) + "\n";
    }
    if (in.svg) {
      PlotSpec spec{"Brightness by window size", "window size (%)", "luminance (nits)", {series}};
      spec.markers = true;
      write_text(ctx, stem_of(in, "sweep.svg"), svg_line_plot(spec));
    }
    if (in.csv) write_text(ctx, stem_of(in, "sweep.csv"), csv);
  }
  return finish_report(ctx, r, in.report, in.path);
}

json summary_json(const DeviationSummary& d) {
  return {{"count", d.count},
          {"max_abs_pct", d.max_abs_pct},
          {"mean_abs_pct", d.mean_abs_pct},
          {"mean_pct", d.mean_pct}};
}

int eotf(const Context& ctx, const LogInput& in, const EotfParams& p, double max_dev) {
  const MeasurementLog log = read_measurement_log(in.path);
  const EotfReport e = analyze_eotf_tracking(log, p);
  Report r;
  r.check = "analyze.eotf";
  r.inputs.push_back(in.path);
  json pts = json::array();
  for (const auto& x : e.points)
    pts.push_back({{"code", x.code},
                   {"ideal_nits", x.ideal},
                   {"measured_nits", x.measured},
                   {"deviation_pct", optional_json(x.deviation_pct)},
                   {"beyond_anchor", x.beyond_anchor}});
  r.result = {{"points", pts},
              {"all", summary_json(e.all)},
              {"low", summary_json(e.low)},
              {"high", summary_json(e.high)},
              {"split_nits", p.split_nits},
              {"peak_anchor_nits", p.peak_anchor},
              {"max_deviation_pct", max_dev}};
  r.status = e.all.max_abs_pct <= max_dev ? Status::kPass : Status::kFail;
  r.summary = "max deviation " + short_number(e.all.max_abs_pct) + "% (low " +
              short_number(e.low.max_abs_pct) + "%, high " + short_number(e.high.max_abs_pct) +
              "%)";
  if (in.svg || in.csv) {
    PlotSeries ideal{"PQ target", {}}, measured{"measured", {}};
    std::string csv = "code,ideal_nits,measured_nits\n";
    for (const auto& x : e.points) {
      ideal.points.emplace_back(x.code, x.ideal);
      measured.points.emplace_back(x.code, x.measured);
      csv += std::to_string(x.code) + "," + short_number(x.ideal) + "," +
             short_number(x.measured) + "\n";
    }
    if (in.svg) {
      PlotSpec spec{"EOTF tracking", "code value", "luminance (nits)", {ideal, measured}};
      spec.markers = true;
      write_text(ctx, stem_of(in, "eotf.svg"), svg_line_plot(spec));
    }
    if (in.csv) write_text(ctx, stem_of(in, "eotf.csv"), csv);
  }
  return finish_report(ctx, r, in.report, in.path);
}

json fit_json(const LinearFit& f) {
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"r", f.r},
          {"residual_rms", f.residual_rms}};
}

int dimming(const Context& ctx, const LogInput& in, const DimmingParams& p) {
  const MeasurementLog log = read_measurement_log(in.path);
  const DimmingReport d = analyze_local_dimming(log, p);
  Report r;
  r.check = "analyze.dimming";
  r.inputs.push_back(in.path);
  json black = json::array(), white = json::array();
  for (const auto& [k, v] : d.black) black.push_back({k, v});
  for (const auto& [k, v] : d.white) white.push_back({k, v});
  r.result = {{"black", black},
              {"white", white},
              {"black_fit", fit_json(d.black_fit)},
              {"white_fit", fit_json(d.white_fit)},
              {"white_peak_nits", d.white_peak},
              {"normalized_black_slope", d.normalized_black_slope},
              {"threshold", p.normalized_slope_threshold},
              {"min_correlation", p.min_correlation},
              {"classification", to_string(d.classification)}};
  r.findings = d.notes;
  r.status = d.classification == DimmingClass::kPoor ? Status::kFail : Status::kPass;
  r.summary = std::string(to_string(d.classification)) + " local dimming (black slope " +
              short_number(d.black_fit.slope) + " nits/%, r " + short_number(d.black_fit.r) + ")";
  if (in.svg || in.csv) {
    PlotSeries b{"black probe", {}}, w{"white probe", {}};
    std::string csv = "percent,black_nits,white_nits\n";
    for (const auto& [k, v] : d.black) {
      b.points.emplace_back(k, v);
      w.points.emplace_back(k, d.white.at(k));
      csv += short_number(k) + "," + short_number(v) + "," + short_number(d.white.at(k)) + "\n";
    }
    if (in.svg) {
      PlotSpec spec{"Local dimming", "white pixels (%)", "luminance (nits)", {b, w}};
      spec.markers = true;
      write_text(ctx, stem_of(in, "dimming.svg"), svg_line_plot(spec));
    }
    if (in.csv) write_text(ctx, stem_of(in, "dimming.csv"), csv);
  }
  return finish_report(ctx, r, in.report, in.path);
}

int cooloff(const Context& ctx, const LogInput& in, double t_safe) {
  const MeasurementLog log = read_measurement_log(in.path);
  const CooloffReport c = cooloff_recommendation(log, t_safe);
  Report r;
  r.check = "analyze.cooloff";
  r.inputs.push_back(in.path);
  r.result = {{"status", to_string(c.status)},
              {"wait_s", c.wait_s},
              {"last_temperature_c", c.last_temperature},
              {"ambient_c", optional_json(c.ambient)},
              {"tau_s", optional_json(c.tau_s)},
              {"t_safe_c", t_safe},
              {"segment_samples", c.segment_samples}};
  switch (c.status) {
    case CooloffStatus::kSafe:
      r.status = Status::kPass;
      r.summary = "panel at " + short_number(c.last_temperature) + " C, no wait needed";
      break;
    case CooloffStatus::kWait:
      r.status = Status::kWarn;
      r.summary = "wait " + short_number(std::ceil(c.wait_s)) + " s before the next session";
      break;
    case CooloffStatus::kNotCooling:
      r.status = Status::kWarn;
      r.summary = "not cooling: trailing temperature is not falling";
      break;
    case CooloffStatus::kUnreachable:
      r.status = Status::kWarn;
      r.summary = "fitted ambient " + short_number(c.ambient.value_or(0)) +
                  " C is above the safe temperature";
      break;
  }
  if (in.svg) {
    PlotSeries series{"temperature", {}};
    for (const auto& s : log.samples)
      if (s.temperature) series.points.emplace_back(s.t, *s.temperature);
    write_text(ctx, stem_of(in, "cooloff.svg"),
               svg_line_plot({"Panel temperature", "time (s)", "temperature (C)", {series}}));
  }
  return finish_report(ctx, r, in.report, in.path);
}

}  // namespace

void add_analyze_command(CLI::App& app, Context& ctx) {
  CLI::App* cmd = app.add_subcommand("analyze", "Analyse photometric measurement logs");
  cmd->require_subcommand(1);
  {
    auto* sub = cmd->add_subcommand("sustained", "Sustained brightness over time");
    auto in = std::make_shared<LogInput>();
    auto p = std::make_shared<SustainedParams>();
    auto probe = std::make_shared<std::string>();
    add_log_input(sub, *in);
    sub->add_option("--threshold", p->thresholds, "Time-above thresholds in nits")
        ->capture_default_str();
    sub->add_option("--decay-fraction", p->decay_fraction)->capture_default_str();
    sub->add_option("--hold", p->hold_s, "Seconds the drop must persist")->capture_default_str();
    sub->add_option("--probe", *probe, "white, black or full")
        ->check(CLI::IsMember({"white", "black", "full"}));
    sub->callback([&ctx, in, p, probe] {
      ctx.action = [&ctx, in, p, probe] {
        SustainedParams params = *p;
        if (!probe->empty()) params.probe = probe_from_name(*probe);
        return sustained(ctx, *in, params);
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("sweep", "Steady-state brightness by window size");
    auto in = std::make_shared<LogInput>();
    auto levels = std::make_shared<std::vector<double>>(std::vector<double>{900, 1000, 1500});
    add_log_input(sub, *in);
    sub->add_option("--level", *levels, "Levels for max_window_at")->capture_default_str();
    sub->callback([&ctx, in, levels] {
      ctx.action = [&ctx, in, levels] { return sweep(ctx, *in, *levels); };
    });
  }
  {
    auto* sub = cmd->add_subcommand("eotf", "Deviation from the PQ EOTF");
    auto in = std::make_shared<LogInput>();
    auto p = std::make_shared<EotfParams>();
    auto range = std::make_shared<std::string>("narrow");
    auto max_dev = std::make_shared<double>(10);
    add_log_input(sub, *in);
    sub->add_option("--bit-depth", p->bit_depth)->capture_default_str();
    sub->add_option("--range", *range)->capture_default_str()->check(
        CLI::IsMember({"narrow", "full"}));
    sub->add_option("--peak-anchor", p->peak_anchor, "Ignore targets above this many nits")
        ->capture_default_str();
    sub->add_option("--split", p->split_nits, "Low/high boundary in nits")->capture_default_str();
    sub->add_option("--max-deviation", *max_dev, "Failing deviation in percent")
        ->capture_default_str();
    sub->callback([&ctx, in, p, range, max_dev] {
      ctx.action = [&ctx, in, p, range, max_dev] {
        EotfParams params = *p;
        params.range = parse_range(*range);
        return eotf(ctx, *in, params, *max_dev);
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("dimming", "Local dimming from a night-sky sweep");
    auto in = std::make_shared<LogInput>();
    auto p = std::make_shared<DimmingParams>();
    add_log_input(sub, *in);
    sub->add_option("--threshold", p->normalized_slope_threshold,
                    "Black slope per point relative to the white peak")
        ->capture_default_str();
    sub->add_option("--min-r", p->min_correlation)->capture_default_str();
    sub->callback([&ctx, in, p] { ctx.action = [&ctx, in, p] { return dimming(ctx, *in, *p); }; });
  }
  {
    auto* sub = cmd->add_subcommand("cooloff", "Recommended cool-off time");
    auto in = std::make_shared<LogInput>();
    auto t_safe = std::make_shared<double>(40);
    add_log_input(sub, *in);
    sub->add_option("--t-safe", *t_safe, "Safe panel temperature in C")->capture_default_str();
    sub->callback([&ctx, in, t_safe] {
      ctx.action = [&ctx, in, t_safe] { return cooloff(ctx, *in, *t_safe); };
    });
  }
}

}  // namespace hdrcheck::cli
