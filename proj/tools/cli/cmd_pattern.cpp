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
#include "hdrcheck/patterns.h"
#include "hdrcheck/prng.h"

namespace hdrcheck::cli {

namespace {

struct CommonOptions {
  std::string size = "3840x2160";
  std::string fps = "25:1";
  int frames = 1;
  int bit_depth = 10;
  std::string range;  // empty: the generator's default
  double noise_sigma = 0;
  std::string name;
  bool no_manifest = false;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--size", o.size, "Frame size WxH")->capture_default_str();
  sub->add_option("--fps", o.fps, "Frame rate NUM:DEN")->capture_default_str();
  sub->add_option("--frames", o.frames, "Frames to write")->capture_default_str()->check(
      CLI::PositiveNumber);
  sub->add_option("--bit-depth", o.bit_depth, "Container bit depth")
      ->capture_default_str()
      ->check(CLI::Range(8, 16));
  sub->add_option("--range", o.range, "narrow or full")
      ->check(CLI::IsMember({"narrow", "full"}));
  sub->add_option("--noise-sigma", o.noise_sigma, "Additive Gaussian noise in code steps")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--name", o.name, "Output base name (default derived from the pattern)");
}

int write_pattern(const Context& ctx, const CommonOptions& o, PatternSpec spec,
                  const std::string& default_name) {
  Geometry g = parse_size(o.size);
  g.fps = parse_rational(o.fps);
  g.frame_count = o.frames;
  spec.format.bit_depth = o.bit_depth;
  if (!o.range.empty()) spec.format.range = parse_range(o.range);
  if (o.noise_sigma > 0)
    spec.noise = NoiseOverlaySpec{o.noise_sigma, derive_seed(ctx.seed, "pattern/noise")};
  const GeneratedPattern pat = generate(spec, g);

  const std::string name = o.name.empty() ? default_name : o.name;
  const auto video = ctx.output_path(name + ".y4m");
  write_y4m(std::vector<Frame>(static_cast<std::size_t>(o.frames), pat.frame), video, g.fps);

  SidecarManifest m;
  m.pattern = pat.manifest;
  m.signalling = pat.frame.signalling;
  m.files.push_back(digest_file(video, video.parent_path()));
  const auto sidecar = sidecar_path_for(video);
  write_manifest(m, sidecar);

  *ctx.out << "video: " << video.string() << "\n";
  *ctx.out << "manifest: " << sidecar.string() << "\n";
  *ctx.out << "manifest sha256: " << sha256_file(sidecar) << "\n";
  *ctx.out << "peak code " << pat.manifest.peak_code << ": "
           << pat.manifest.count_of(pat.manifest.peak_code) << " pixels\n";
  for (const auto& n : pat.manifest.notes) *ctx.out << "note: " << n << "\n";
  return kExitOk;
}

std::optional<int> peak_code(const std::optional<int>& code, const std::optional<double>& nits,
                             const CommonOptions& o, SignalRange fallback) {
  if (code && nits) throw ParameterError("give either --peak-code or --peak-nits, not both");
  if (code) return code;
  if (nits) return peak_code_for_nits(*nits, o.bit_depth, o.range.empty() ? fallback : parse_range(o.range));
  return std::nullopt;
}

}  // namespace

void add_pattern_command(CLI::App& app, Context& ctx) {
  CLI::App* cmd = app.add_subcommand("pattern", "Generate a test pattern (Y4M + manifest)");
  cmd->require_subcommand(1);

  {
    auto* sub = cmd->add_subcommand("night-sky", "Randomly placed peak-white pixels on black");
    auto o = std::make_shared<CommonOptions>();
    auto percent = std::make_shared<double>(1);
    auto code = std::make_shared<std::optional<int>>();
    auto nits = std::make_shared<std::optional<double>>();
    add_common(sub, *o);
    sub->add_option("--percent", *percent, "Share of peak-white pixels")
        ->required()
        ->check(CLI::Range(0.0, 100.0));
    sub->add_option("--peak-code", *code, "Peak luma code");
    sub->add_option("--peak-nits", *nits, "Peak luminance, mapped through the inverse EOTF");
    sub->callback([&ctx, o, percent, code, nits] {
      ctx.action = [&ctx, o, percent, code, nits] {
        NightSkySpec s;
        s.percent_white = *percent;
        s.peak_code = peak_code(*code, *nits, *o, SignalRange::kNarrow);
        s.seed = derive_seed(ctx.seed, "pattern/night-sky");
        return write_pattern(ctx, *o, PatternSpec{s, {}, {}},
                             "night-sky-" + short_number(*percent) + "pct");
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("window", "Centred peak-white window");
    auto o = std::make_shared<CommonOptions>();
    auto area = std::make_shared<double>(10);
    auto code = std::make_shared<std::optional<int>>();
    auto nits = std::make_shared<std::optional<double>>();
    add_common(sub, *o);
    sub->add_option("--area", *area, "Window area in percent of the screen")
        ->required()
        ->check(CLI::Range(0.0, 100.0));
    sub->add_option("--peak-code", *code, "Peak luma code");
    sub->add_option("--peak-nits", *nits, "Peak luminance, mapped through the inverse EOTF");
    sub->callback([&ctx, o, area, code, nits] {
      ctx.action = [&ctx, o, area, code, nits] {
        WhiteWindowSpec s;
        s.area_percent = *area;
        s.peak_code = peak_code(*code, *nits, *o, SignalRange::kNarrow);
        return write_pattern(ctx, *o, PatternSpec{s, {}, {}},
                             "window-" + short_number(*area) + "pct");
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("ramp", "Grey ramp of equal-width bands");
    auto o = std::make_shared<CommonOptions>();
    auto spec = std::make_shared<GreyRampSpec>();
    auto orientation = std::make_shared<std::string>("horizontal");
    add_common(sub, *o);
    sub->add_option("--levels", spec->levels, "Number of bands")->capture_default_str();
    sub->add_option("--window", spec->window_percent, "Ramp window area in percent")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 100.0));
    sub->add_option("--orientation", *orientation, "horizontal or vertical")
        ->capture_default_str()
        ->check(CLI::IsMember({"horizontal", "vertical"}));
    sub->callback([&ctx, o, spec, orientation] {
      ctx.action = [&ctx, o, spec, orientation] {
        GreyRampSpec s = *spec;
        s.orientation = *orientation == "vertical" ? RampOrientation::kVertical
                                                   : RampOrientation::kHorizontal;
        PatternSpec p{s, VideoFormat{10, SignalRange::kFull, ChromaFormat::k420}, {}};
        return write_pattern(ctx, *o, p, "ramp-" + std::to_string(s.levels));
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("flat", "Uniform field (e.g. grey session screen)");
    auto o = std::make_shared<CommonOptions>();
    auto hex = std::make_shared<std::optional<std::string>>();
    auto code = std::make_shared<std::optional<int>>();
    add_common(sub, *o);
    auto* hex_opt = sub->add_option("--hex", *hex, "Colour as RRGGBB or #RRGGBB");
    sub->add_option("--code", *code, "Luma code with neutral chroma")->excludes(hex_opt);
    sub->callback([&ctx, o, hex, code] {
      ctx.action = [&ctx, o, hex, code] {
        if (!*hex && !*code) throw ParameterError("flat needs --hex or --code");
        FlatFieldSpec s{*hex, *code};
        PatternSpec p{s, VideoFormat{10, SignalRange::kFull, ChromaFormat::k420}, {}};
        std::string name = "flat-";
        if (*hex) {
          std::string h = **hex;
          if (!h.empty() && h.front() == '#') h.erase(0, 1);
          name += h;
        } else {
          name += "code" + std::to_string(**code);
        }
        return write_pattern(ctx, *o, p, name);
      };
    });
  }
  {
    auto* sub = cmd->add_subcommand("playlist", "Measurement playlist for a sweep");
    auto req = std::make_shared<SweepRequest>();
    auto kind = std::make_shared<std::string>("window");
    auto values = std::make_shared<std::vector<double>>();
    auto size = std::make_shared<std::string>("3840x2160");
    auto output = std::make_shared<std::string>();
    auto range = std::make_shared<std::string>();
    sub->add_option("--kind", *kind, "night-sky, window, ebu-window or sustained")
        ->capture_default_str()
        ->check(CLI::IsMember({"night-sky", "window", "ebu-window", "sustained"}));
    sub->add_option("--values", *values, "Override the default percentage set");
    sub->add_option("--entry-duration", req->entry_duration_s, "Seconds per entry")
        ->capture_default_str();
    sub->add_option("--lead-in", req->lead_in_black_s, "Black seconds before each entry")
        ->capture_default_str();
    sub->add_option("--sustained-duration", req->sustained_duration_s)->capture_default_str();
    sub->add_option("--sustained-window", req->sustained_window_percent)->capture_default_str();
    sub->add_option("--bit-depth", req->format.bit_depth)->capture_default_str();
    sub->add_option("--range", *range, "narrow or full");
    sub->add_option("--size", *size, "Frame size WxH")->capture_default_str();
    sub->add_option("-o,--output", *output, "Playlist JSON path");
    sub->callback([&ctx, req, kind, values, size, output, range, sub] {
      ctx.action = [&ctx, req, kind, values, size, output, range, sub] {
        SweepRequest r = *req;
        r.kind = *sweep_kind_from_name(*kind);
        if (sub->count("--values")) r.values = *values;
        if (!range->empty()) r.format.range = parse_range(*range);
        r.seed = derive_seed(ctx.seed, "playlist");
        const Playlist p = build_playlist(r, parse_size(*size));
        const auto path = ctx.output_path(output->empty() ? p.name + ".playlist.json" : *output);
        write_file_atomic(path, to_json(p).dump(2) + "\n");
        *ctx.out << "playlist: " << path.string() << " (" << p.entries.size() << " entries, "
                 << short_number(p.total_duration()) << " s)\n";
        return kExitOk;
      };
    });
  }
}

}  // namespace hdrcheck::cli
