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
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/patterns.h"
#include "hdrcheck/prng.h"

namespace hdrcheck {

namespace {

using nlohmann::json;

void check_format(const VideoFormat& f) {
  if (f.bit_depth != 8 && f.bit_depth != 10 && f.bit_depth != 12)
    throw ParameterError("pattern bit depth must be 8, 10 or 12");
}

void check_percent(double value, const char* what) {
  if (!(value > 0.0 && value <= 100.0))
    throw ParameterError(std::string(what) + " must be in (0, 100], got " +
                         std::to_string(value));
}

Frame blank_frame(const Geometry& geom, const VideoFormat& format) {
  Frame f = Frame::make(geom.width, geom.height, format.bit_depth, format.chroma,
                        ColorModel::kYcbcr, format.range);
  f.signalling = HdrSignalling::hdr10(format.range == SignalRange::kFull);
  return f;
}

int resolve_peak(const std::optional<int>& peak, const VideoFormat& format) {
  const int lo = nominal_min_code(format.bit_depth, format.range, PlaneKind::kLuma);
  const int hi = nominal_max_code(format.bit_depth, format.range, PlaneKind::kLuma);
  const int code = peak.value_or(hi);
  if (code < lo || code > hi)
    throw ParameterError("peak code " + std::to_string(code) + " outside the nominal range [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return code;
}

PatternManifest start_manifest(const PatternSpec& spec, const Geometry& geom, const Frame& f) {
  PatternManifest m;
  m.kind = pattern_kind(spec);
  m.spec = to_json(spec);
  m.geometry = geom;
  m.format = spec.format;
  m.signalling = f.signalling;
  m.base_code = nominal_min_code(spec.format.bit_depth, spec.format.range, PlaneKind::kLuma);
  return m;
}

}  // namespace

json to_json(const VideoFormat& f) {
  return {{"bit_depth", f.bit_depth},
          {"range", to_string(f.range)},
          {"chroma", to_string(f.chroma)}};
}

VideoFormat video_format_from_json(const json& j) {
  VideoFormat f;
  f.bit_depth = j.at("bit_depth").get<int>();
  const std::string range = j.at("range").get<std::string>();
  if (range == "narrow")
    f.range = SignalRange::kNarrow;
  else if (range == "full")
    f.range = SignalRange::kFull;
  else
    throw ParameterError("unknown range '" + range + "'");
  const std::string chroma = j.at("chroma").get<std::string>();
  if (chroma == "420")
    f.chroma = ChromaFormat::k420;
  else if (chroma == "444")
    f.chroma = ChromaFormat::k444;
  else
    throw ParameterError("unknown chroma format '" + chroma + "'");
  return f;
}

json to_json(const Geometry& g) {
  return {{"width", g.width},
          {"height", g.height},
          {"fps", std::to_string(g.fps.num) + ":" + std::to_string(g.fps.den)},
          {"frame_count", g.frame_count}};
}

Geometry geometry_from_json(const json& j) {
  Geometry g;
  g.width = j.at("width").get<int>();
  g.height = j.at("height").get<int>();
  const std::string fps = j.at("fps").get<std::string>();
  const auto colon = fps.find(':');
  if (colon == std::string::npos) throw ParameterError("fps must look like NUM:DEN");
  g.fps = {std::stoi(fps.substr(0, colon)), std::stoi(fps.substr(colon + 1))};
  g.frame_count = j.at("frame_count").get<int>();
  g.validate();
  return g;
}

void Geometry::validate() const {
  if (width <= 0 || height <= 0 || width % 2 != 0 || height % 2 != 0)
    throw ParameterError("geometry must have even, positive width and height, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  if (frame_count < 1) throw ParameterError("frame_count must be >= 1");
  if (fps.num <= 0 || fps.den <= 0) throw ParameterError("frame rate must be positive");
}

Geometry parse_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  Geometry g;
  try {
    if (x == std::string::npos) throw std::invalid_argument("no separator");
    std::size_t used = 0;
    g.width = std::stoi(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument("trailing");
    const std::string h = text.substr(x + 1);
    g.height = std::stoi(h, &used);
    if (used != h.size()) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw ParameterError("size must look like WIDTHxHEIGHT, got '" + text + "'");
  }
  g.validate();
  return g;
}

Rect window_rect(int width, int height, double percent) {
  check_percent(percent, "window area percent");
  const double target = percent / 100.0 * width * height;
  const double scale = std::sqrt(percent / 100.0);
  const long base_h = std::lround(height * scale);
  const double aspect = static_cast<double>(width) / height;
  Rect best;
  double best_err = 0, best_aspect = 0;
  bool have = false;
  for (long h = base_h - 1; h <= base_h + 1; ++h) {
    if (h < 1 || h > height) continue;
    const long w = std::clamp<long>(std::lround(target / h), 1, width);
    const double err = std::fabs(static_cast<double>(w) * h - target);
    const double aspect_err = std::fabs(static_cast<double>(w) / h - aspect);
    if (!have || err < best_err || (err == best_err && aspect_err < best_aspect)) {
      best = Rect{static_cast<int>((width - w) / 2), static_cast<int>((height - h) / 2),
                  static_cast<int>(w), static_cast<int>(h)};
      best_err = err;
      best_aspect = aspect_err;
      have = true;
    }
  }
  return best;
}

const char* pattern_kind(const PatternSpec& spec) {
  struct Visitor {
    const char* operator()(const NightSkySpec&) const { return "night-sky"; }
    const char* operator()(const WhiteWindowSpec&) const { return "white-window"; }
    const char* operator()(const GreyRampSpec&) const { return "grey-ramp"; }
    const char* operator()(const FlatFieldSpec&) const { return "flat"; }
  };
  return std::visit(Visitor{}, spec.variant);
}

std::map<int, std::uint64_t> luma_histogram(const Frame& f) {
  std::map<int, std::uint64_t> h;
  for (std::uint16_t s : f.planes[0].samples) ++h[s];
  return h;
}

int peak_code_for_nits(double nits, int bit_depth, SignalRange range) {
  const double e = pq_inv_eotf(Luminance(nits)).value();
  return quantize(e, bit_depth, range, PlaneKind::kLuma).code;
}

std::array<int, 3> parse_hex_colour(const std::string& hex) {
  std::string s = hex;
  if (!s.empty() && s.front() == '#') s.erase(0, 1);
  if (s.size() != 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isxdigit(c) != 0;
      }))
    throw ParameterError("malformed hex colour '" + hex + "', expected #RRGGBB");
  std::array<int, 3> rgb{};
  for (int i = 0; i < 3; ++i) rgb[i] = std::stoi(s.substr(2 * i, 2), nullptr, 16);
  return rgb;
}

GeneratedPattern gen_night_sky(const NightSkySpec& spec, const Geometry& geom,
                               const VideoFormat& format) {
  geom.validate();
  check_format(format);
  check_percent(spec.percent_white, "night-sky white percentage");
  const int peak = resolve_peak(spec.peak_code, format);

  PatternSpec full{spec, format, std::nullopt};
  Frame f = blank_frame(geom, format);
  const std::uint64_t n = static_cast<std::uint64_t>(geom.width) * geom.height;
  const std::uint64_t k = static_cast<std::uint64_t>(std::llround(spec.percent_white * n / 100.0));

  std::vector<std::uint32_t> index(n);
  std::iota(index.begin(), index.end(), 0u);
  Xoshiro256 rng(spec.seed);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + rng.bounded(n - i);
    std::swap(index[i], index[j]);
    f.planes[0].samples[index[i]] = static_cast<std::uint16_t>(peak);
  }

  PatternManifest manifest = start_manifest(full, geom, f);
  GeneratedPattern out{std::move(f), std::move(manifest)};
  out.manifest.seed = spec.seed;
  out.manifest.prng = Xoshiro256::kAlgorithm;
  out.manifest.peak_code = peak;
  out.manifest.luma_counts = luma_histogram(out.frame);
  return out;
}

GeneratedPattern gen_white_window(const WhiteWindowSpec& spec, const Geometry& geom,
                                  const VideoFormat& format) {
  geom.validate();
  check_format(format);
  check_percent(spec.area_percent, "window area percent");
  const int peak = resolve_peak(spec.peak_code, format);
  Frame f = blank_frame(geom, format);
  const Rect r = window_rect(geom.width, geom.height, spec.area_percent);
  for (int y = r.y; y < r.y + r.height; ++y)
    for (int x = r.x; x < r.x + r.width; ++x) f.planes[0].at(x, y) = static_cast<std::uint16_t>(peak);

  GeneratedPattern out{f, start_manifest(PatternSpec{spec, format, std::nullopt}, geom, f)};
  out.manifest.peak_code = peak;
  out.manifest.region = r;
  out.manifest.luma_counts = luma_histogram(out.frame);
  return out;
}

GeneratedPattern gen_grey_ramp(const GreyRampSpec& spec, const Geometry& geom,
                               const VideoFormat& format) {
  geom.validate();
  check_format(format);
  check_percent(spec.window_percent, "ramp window percent");
  const int lo = nominal_min_code(format.bit_depth, format.range, PlaneKind::kLuma);
  const int hi = nominal_max_code(format.bit_depth, format.range, PlaneKind::kLuma);
  const int representable = hi - lo + 1;
  if (spec.levels < 2 || spec.levels > representable)
    throw ParameterError("ramp levels must be in [2, " + std::to_string(representable) +
                         "] for " + std::to_string(format.bit_depth) + "-bit " +
                         to_string(format.range) + " range, got " +
                         std::to_string(spec.levels));
  const Rect r = window_rect(geom.width, geom.height, spec.window_percent);
  const bool horizontal = spec.orientation == RampOrientation::kHorizontal;
  const int extent = horizontal ? r.width : r.height;
  if (extent < spec.levels)
    throw ParameterError("ramp window is " + std::to_string(extent) + " pixels across, too " +
                         "narrow for " + std::to_string(spec.levels) + " levels");

  Frame f = blank_frame(geom, format);
  const long long levels = spec.levels;
  for (int y = r.y; y < r.y + r.height; ++y) {
    for (int x = r.x; x < r.x + r.width; ++x) {
      const long long pos = horizontal ? x - r.x : y - r.y;
      // Band i covers [floor(i * extent / L), floor((i + 1) * extent / L)).
      const long long band = ((pos + 1) * levels - 1) / extent;
      const long long code =
          lo + (band * (hi - lo) * 2 + (levels - 1)) / (2 * (levels - 1));  // round half up
      f.planes[0].at(x, y) = static_cast<std::uint16_t>(code);
    }
  }

  GeneratedPattern out{f, start_manifest(PatternSpec{spec, format, std::nullopt}, geom, f)};
  out.manifest.peak_code = hi;
  out.manifest.region = r;
  out.manifest.luma_counts = luma_histogram(out.frame);
  if (format.range == SignalRange::kNarrow)
    out.manifest.notes.push_back("narrow range: at most " + std::to_string(representable) +
                                 " levels representable, ramp uses " +
                                 std::to_string(spec.levels));
  return out;
}

GeneratedPattern gen_flat(const FlatFieldSpec& spec, const Geometry& geom,
                          const VideoFormat& format) {
  geom.validate();
  check_format(format);
  if (spec.hex.has_value() == spec.code.has_value())
    throw ParameterError("flat field needs exactly one of hex colour or code");
  Frame f = blank_frame(geom, format);
  const int shift = format.bit_depth - 8;
  int luma, cb, cr;
  double nominal;
  if (spec.hex) {
    const auto rgb8 = parse_hex_colour(*spec.hex);
    const Rgb rgb{rgb8[0] / 255.0, rgb8[1] / 255.0, rgb8[2] / 255.0};
    const Ycbcr ycc = rgb_to_ycbcr(rgb, MatrixCoefficients::kBt2020Ncl);
    // Hex colours are 8-bit values; deeper containers take a bit shift.
    const CodeValue y8 = quantize(ycc.y, 8, format.range, PlaneKind::kLuma);
    luma = y8.code << shift;
    cb = quantize(ycc.cb, 8, format.range, PlaneKind::kChroma).code << shift;
    cr = quantize(ycc.cr, 8, format.range, PlaneKind::kChroma).code << shift;
    nominal = pq_signal_to_nits(dequantize(y8, PlaneKind::kLuma));
  } else {
    luma = *spec.code;
    if (luma < nominal_min_code(format.bit_depth, format.range, PlaneKind::kLuma) ||
        luma > nominal_max_code(format.bit_depth, format.range, PlaneKind::kLuma))
      throw ParameterError("flat code " + std::to_string(luma) + " outside the nominal range");
    cb = cr = 1 << (format.bit_depth - 1);
    nominal = pq_signal_to_nits(
        dequantize(CodeValue{luma, format.bit_depth, format.range}, PlaneKind::kLuma));
  }
  std::fill(f.planes[0].samples.begin(), f.planes[0].samples.end(), static_cast<std::uint16_t>(luma));
  std::fill(f.planes[1].samples.begin(), f.planes[1].samples.end(), static_cast<std::uint16_t>(cb));
  std::fill(f.planes[2].samples.begin(), f.planes[2].samples.end(), static_cast<std::uint16_t>(cr));

  GeneratedPattern out{f, start_manifest(PatternSpec{spec, format, std::nullopt}, geom, f)};
  out.manifest.peak_code = luma;
  out.manifest.base_code = luma;
  out.manifest.nominal_nits = nominal;
  out.manifest.luma_counts = luma_histogram(out.frame);
  return out;
}

Frame add_noise(const Frame& frame, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw ParameterError("noise sigma must be >= 0");
  Frame out = frame;
  if (sigma == 0.0) return out;
  Xoshiro256 rng(seed);
  for (int p = 0; p < 3; ++p) {
    const PlaneKind kind = frame.plane_kind(p);
    const int lo = nominal_min_code(frame.bit_depth, frame.range, kind);
    const int hi = nominal_max_code(frame.bit_depth, frame.range, kind);
    for (std::uint16_t& s : out.planes[p].samples) {
      const long v = s + std::lround(sigma * rng.gaussian());
      s = static_cast<std::uint16_t>(std::clamp<long>(v, lo, hi));
    }
  }
  return out;
}

GeneratedPattern generate(const PatternSpec& spec, const Geometry& geom) {
  struct Visitor {
    const Geometry& geom;
    const VideoFormat& format;
    GeneratedPattern operator()(const NightSkySpec& s) const { return gen_night_sky(s, geom, format); }
    GeneratedPattern operator()(const WhiteWindowSpec& s) const {
      return gen_white_window(s, geom, format);
    }
    GeneratedPattern operator()(const GreyRampSpec& s) const { return gen_grey_ramp(s, geom, format); }
    GeneratedPattern operator()(const FlatFieldSpec& s) const { return gen_flat(s, geom, format); }
  };
  GeneratedPattern out = std::visit(Visitor{geom, spec.format}, spec.variant);
  if (spec.noise) {
    out.frame = add_noise(out.frame, spec.noise->sigma, spec.noise->seed);
    out.manifest.spec = to_json(spec);
    out.manifest.luma_counts = luma_histogram(out.frame);
    out.manifest.notes.push_back("gaussian noise overlay applied");
  }
  return out;
}

json to_json(const PatternSpec& spec) {
  json j;
  struct Visitor {
    json& j;
    void operator()(const NightSkySpec& s) const {
      j["percent_white"] = s.percent_white;
      j["seed"] = s.seed;
      if (s.peak_code) j["peak_code"] = *s.peak_code;
    }
    void operator()(const WhiteWindowSpec& s) const {
      j["area_percent"] = s.area_percent;
      if (s.peak_code) j["peak_code"] = *s.peak_code;
    }
    void operator()(const GreyRampSpec& s) const {
      j["levels"] = s.levels;
      j["window_percent"] = s.window_percent;
      j["orientation"] = s.orientation == RampOrientation::kHorizontal ? "horizontal" : "vertical";
    }
    void operator()(const FlatFieldSpec& s) const {
      if (s.hex) j["hex"] = *s.hex;
      if (s.code) j["code"] = *s.code;
    }
  };
  j["kind"] = pattern_kind(spec);
  std::visit(Visitor{j}, spec.variant);
  j["format"] = to_json(spec.format);
  if (spec.noise) j["noise"] = {{"sigma", spec.noise->sigma}, {"seed", spec.noise->seed}};
  return j;
}

PatternSpec pattern_spec_from_json(const json& j) {
  PatternSpec spec;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    spec.format = video_format_from_json(j.at("format"));
    auto opt_int = [&](const char* key) -> std::optional<int> {
      if (j.contains(key)) return j.at(key).get<int>();
      return std::nullopt;
    };
    if (kind == "night-sky") {
      spec.variant = NightSkySpec{j.at("percent_white").get<double>(), opt_int("peak_code"),
                                  j.at("seed").get<std::uint64_t>()};
    } else if (kind == "white-window") {
      spec.variant = WhiteWindowSpec{j.at("area_percent").get<double>(), opt_int("peak_code")};
    } else if (kind == "grey-ramp") {
      GreyRampSpec r;
      r.levels = j.at("levels").get<int>();
      r.window_percent = j.at("window_percent").get<double>();
      r.orientation = j.value("orientation", "horizontal") == "vertical"
                          ? RampOrientation::kVertical
                          : RampOrientation::kHorizontal;
      spec.variant = r;
    } else if (kind == "flat") {
      FlatFieldSpec f;
      if (j.contains("hex")) f.hex = j.at("hex").get<std::string>();
      f.code = opt_int("code");
      spec.variant = f;
    } else {
      throw ParameterError("unknown pattern kind '" + kind + "'");
    }
    if (j.contains("noise"))
      spec.noise = NoiseOverlaySpec{j.at("noise").at("sigma").get<double>(),
                                    j.at("noise").at("seed").get<std::uint64_t>()};
  } catch (const json::exception& e) {
    throw ParameterError(std::string("invalid pattern spec: ") + e.what());
  }
  return spec;
}

}  // namespace hdrcheck
