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
#include "hdrcheck/conversion.h"
#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"
#include "hdrcheck/verify.h"

namespace hdrcheck::cli {

using nlohmann::json;

namespace {

struct FrameInput {
  std::string path;
  std::string raw;
  std::size_t frame = 0;
  std::string region;
  int plane = 0;
  std::string report;
};

void add_frame_input(CLI::App* sub, FrameInput& in) {
  sub->add_option("input", in.path, "Y4M file (or raw planar with --raw)")->required();
  sub->add_option("--raw", in.raw, "Raw planar descriptor JSON");
  sub->add_option("--frame", in.frame, "Frame index")->capture_default_str();
  sub->add_option("--region", in.region, "Analysis region x,y,width,height");
  sub->add_option("--plane", in.plane, "Plane index")->capture_default_str()->check(
      CLI::Range(0, 2));
  sub->add_option("--report", in.report, "Report path");
}

Frame pick_frame(const FrameInput& in) {
  std::vector<Frame> frames = load_frames(in.path, in.raw);
  if (in.frame >= frames.size())
    throw ParameterError("frame " + std::to_string(in.frame) + " requested but the file has " +
                         std::to_string(frames.size()));
  return std::move(frames[in.frame]);
}

std::optional<Rect> region_of(const FrameInput& in) {
  if (in.region.empty()) return std::nullopt;
  return parse_rect(in.region);
}

json rect_json(const std::optional<Rect>& r) {
  if (!r) return nullptr;
  return {{"x", r->x}, {"y", r->y}, {"width", r->width}, {"height", r->height}};
}

int bitdepth(const Context& ctx, const FrameInput& in) {
  const Frame f = pick_frame(in);
  const auto region = region_of(in);
  const BitDepthReport b = estimate_effective_bitdepth(f, region, in.plane);
  Report r;
  r.check = "verify.bitdepth";
  r.inputs.push_back(in.path);
  r.result = {{"container_bits", b.container_bits},
              {"distinct_levels", b.distinct_levels},
              {"step_gcd", b.step_gcd},
              {"effective_bits", b.effective_bits},
              {"noise_sigma_estimate", b.noise_sigma_estimate},
              {"candidate_step", b.candidate_step ? json(*b.candidate_step) : json(nullptr)},
              {"confidence", to_string(b.confidence)},
              {"region", rect_json(region)}};
  if (b.confidence == Confidence::kNoiseMasked) {
    r.status = Status::kWarn;
    r.summary = "noise-masked: noise of sigma " + short_number(b.noise_sigma_estimate) +
                " can hide decimation, bit depth not confirmed";
    if (b.candidate_step)
      r.findings.push_back("ramp profile suggests a step of " + std::to_string(*b.candidate_step) +
                           " codes (" +
                           short_number(f.bit_depth - std::log2(*b.candidate_step)) +
                           "-bit decimation)");
  } else if (b.step_gcd == 1) {
    r.status = Status::kPass;
    r.summary = "clean chain: " + std::to_string(b.container_bits) + " effective bits";
  } else {
    r.status = Status::kFail;
    r.summary = short_number(b.effective_bits) + "-bit decimation (code step " +
                std::to_string(b.step_gcd) + " in a " + std::to_string(b.container_bits) +
                "-bit container)";
  }
  if (b.confidence == Confidence::kLow) r.findings.push_back("low confidence: noise present");
  r.result["chain"] = r.summary;
  return finish_report(ctx, r, in.report, in.path);
}

int banding(const Context& ctx, const FrameInput& in, const std::string& orientation) {
  const Frame f = pick_frame(in);
  const auto region = region_of(in);
  std::optional<RampOrientation> o;
  if (orientation == "horizontal") o = RampOrientation::kHorizontal;
  if (orientation == "vertical") o = RampOrientation::kVertical;
  const BandingReport b = detect_banding(f, region, o, in.plane);
  Report r;
  r.check = "verify.banding";
  r.inputs.push_back(in.path);
  r.result = {{"orientation", b.orientation == RampOrientation::kHorizontal ? "horizontal"
                                                                             : "vertical"},
              {"band_count", b.band_count},
              {"mean_band_width", b.mean_band_width},
              {"min_band_width", b.min_band_width},
              {"max_band_width", b.max_band_width},
              {"monotone", b.monotone},
              {"edges", b.edges},
              {"region", rect_json(region)}};
  r.findings = b.warnings;
  r.status = b.monotone ? Status::kPass : Status::kWarn;
  r.summary = std::to_string(b.band_count) + " bands, mean width " +
              short_number(b.mean_band_width) + " px";
  if (b.band_count > 1 && b.max_band_width - b.min_band_width > 1)
    r.findings.push_back("band widths vary from " + std::to_string(b.min_band_width) + " to " +
                         std::to_string(b.max_band_width) + " px");
  return finish_report(ctx, r, in.report, in.path);
}

int fidelity(const Context& ctx, const std::string& ref, const std::string& rec,
             const std::string& raw, double min_psnr, const std::string& report_path) {
  const auto a = load_frames(ref, raw);
  const auto b = load_frames(rec, raw);
  if (a.size() != b.size())
    throw ParameterError("reference has " + std::to_string(a.size()) +
                         " frames, reconstruction " + std::to_string(b.size()));
  Report r;
  r.check = "verify.fidelity";
  r.inputs = {ref, rec};
  json frames = json::array();
  double worst = INFINITY, max_err = 0, dist = 0;
  bool identical = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const FidelityReport f = roundtrip_fidelity(a[i], b[i]);
    json ch = json::array();
    for (const auto& c : f.channels)
      ch.push_back({{"psnr_db", finite_or_marker(c.psnr_db)},
                    {"max_abs_error", c.max_abs_error},
                    {"mse", c.mse}});
    frames.push_back({{"channels", ch},
                      {"max_abs_error", f.max_abs_error},
                      {"mean_linear_distance_nits", f.mean_linear_distance_nits}});
    worst = std::min(worst, f.min_psnr_db());
    max_err = std::max(max_err, f.max_abs_error);
    dist += f.mean_linear_distance_nits;
    identical = identical && f.identical();
  }
  r.result = {{"frames", frames},
              {"min_psnr_db", finite_or_marker(worst)},
              {"max_abs_error", max_err},
              {"mean_linear_distance_nits", a.empty() ? 0.0 : dist / a.size()},
              {"identical", identical},
              {"min_psnr_threshold_db", min_psnr}};
  if (identical) {
    r.status = Status::kPass;
    r.summary = "identical";
  } else {
    r.status = worst >= min_psnr ? Status::kPass : Status::kFail;
    r.summary = "minimum PSNR " + short_number(worst) + " dB (threshold " +
                short_number(min_psnr) + " dB)";
  }
  return finish_report(ctx, r, report_path, ref);
}

int stats(const Context& ctx, const std::vector<std::string>& inputs, const std::string& raw,
          bool histogram, const std::string& report_path) {
  std::vector<Frame> all;
  for (const auto& p : inputs) {
    auto f = load_frames(p, raw);
    all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  }
  const SignalStats s = signal_stats(all);
  Report r;
  r.check = "verify.stats";
  for (const auto& p : inputs) r.inputs.push_back(p);
  json planes = json::array();
  std::uint64_t violations = 0;
  for (const auto& p : s.planes) {
    json pj = {{"min", p.min},
               {"max", p.max},
               {"mean", p.mean()},
               {"count", p.count},
               {"below_nominal", p.below_nominal},
               {"above_nominal", p.above_nominal}};
    if (histogram) {
      json h = json::object();
      for (std::size_t c = 0; c < p.histogram.size(); ++c)
        if (p.histogram[c]) h[std::to_string(c)] = p.histogram[c];
      pj["histogram"] = h;
    }
    planes.push_back(pj);
    violations += p.violations();
  }
  r.result = {{"frames", s.frames},
              {"bit_depth", s.bit_depth},
              {"range", to_string(s.range)},
              {"model", to_string(s.model)},
              {"planes", planes},
              {"narrow_range_violations", violations}};
  r.status = violations ? Status::kWarn : Status::kPass;
  r.summary = std::to_string(s.frames) + " frame(s), " + std::to_string(violations) +
              " sample(s) outside the nominal range";
  return finish_report(ctx, r, report_path, inputs.front());
}

int gamut(const Context& ctx, const FrameInput& in, const std::string& target_name,
          double tolerance, bool assume_hdr10) {
  Frame f = pick_frame(in);
  if (assume_hdr10 && !f.signalling.colour)
    f.signalling = HdrSignalling::hdr10(f.range == SignalRange::kFull);
  const auto target = primaries_from_name(target_name);
  if (!target) throw ParameterError("unknown target gamut '" + target_name + "'");
  const OutOfGamutMap m = gamut_marker(f, *target, tolerance);
  Report r;
  r.check = "verify.gamut." + target_name;
  r.inputs.push_back(in.path);
  r.result = {{"target", target->name},
              {"flagged", m.flagged},
              {"pixels", m.mask.size()},
              {"fraction", m.fraction},
              {"tolerance", tolerance}};
  r.status = m.flagged ? Status::kWarn : Status::kPass;
  r.summary = std::to_string(m.flagged) + " of " + std::to_string(m.mask.size()) +
              " pixels outside " + target->name;
  return finish_report(ctx, r, in.report, in.path);
}

}  // namespace

void add_verify_command(CLI::App& app, Context& ctx) {
  CLI::App* cmd = app.add_subcommand("verify", "Bit depth, banding, fidelity, statistics, gamut");
  cmd->require_subcommand(1);
  {
    auto* sub = cmd->add_subcommand("bitdepth", "Effective bit depth of a ramp region");
    auto in = std::make_shared<FrameInput>();
    add_frame_input(sub, *in);
    sub->callback([&ctx, in] { ctx.action = [&ctx, in] { return bitdepth(ctx, *in); }; });
  }
  {
    auto* sub = cmd->add_subcommand("banding", "Band edges of a ramp region");
    auto in = std::make_shared<FrameInput>();
    auto orientation = std::make_shared<std::string>("auto");
    add_frame_input(sub, *in);
    sub->add_option("--orientation", *orientation, "auto, horizontal or vertical")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "horizontal", "vertical"}));
    sub->callback([&ctx, in, orientation] {
      ctx.action = [&ctx, in, orientation] { return banding(ctx, *in, *orientation); };
    });
  }
  {
    auto* sub = cmd->add_subcommand("fidelity", "Compare reference and reconstructed RGB 4:4:4");
    struct Opts {
      std::string ref, rec, raw, report;
      double min_psnr = 60;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("reference", o->ref)->required();
    sub->add_option("reconstructed", o->rec)->required();
    sub->add_option("--raw", o->raw, "Raw planar descriptor JSON for both inputs");
    sub->add_option("--min-psnr", o->min_psnr, "Per-channel PSNR threshold in dB")
        ->capture_default_str();
    sub->add_option("--report", o->report, "Report path");
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] {
        return fidelity(ctx, o->ref, o->rec, o->raw, o->min_psnr, o->report);
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("stats", "Per-plane signal statistics");
    struct Opts {
      std::vector<std::string> inputs;
      std::string raw, report;
      bool histogram = false;
    };
    auto o = std::make_shared<Opts>();
    sub->add_option("inputs", o->inputs)->required();
    sub->add_option("--raw", o->raw, "Raw planar descriptor JSON");
    sub->add_flag("--histogram", o->histogram, "Include per-plane histograms");
    sub->add_option("--report", o->report, "Report path");
    sub->callback([&ctx, o] {
      ctx.action = [&ctx, o] { return stats(ctx, o->inputs, o->raw, o->histogram, o->report); };
    });
  }
  {
    auto* sub = cmd->add_subcommand("gamut", "Flag pixels outside a target gamut");
    auto in = std::make_shared<FrameInput>();
    auto target = std::make_shared<std::string>("bt709");
    auto tolerance = std::make_shared<double>(kDefaultGamutTolerance);
    auto assume = std::make_shared<bool>(false);
    add_frame_input(sub, *in);
    sub->add_option("--target", *target, "bt709, p3 or bt2020")->capture_default_str();
    sub->add_option("--tolerance", *tolerance)->capture_default_str();
    sub->add_flag("--assume-hdr10", *assume, "Treat unsignalled input as BT.2020/PQ");
    sub->callback([&ctx, in, target, tolerance, assume] {
      ctx.action = [&ctx, in, target, tolerance, assume] {
        return gamut(ctx, *in, *target, *tolerance, *assume);
      };
    });
  }
}

}  // namespace hdrcheck::cli
