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

#ifndef HDRCHECK_PATTERNS_H
#define HDRCHECK_PATTERNS_H

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hdrcheck/frame.h"

namespace hdrcheck {

struct Rational {
  int num = 25;
  int den = 1;
  bool operator==(const Rational&) const = default;
};

struct Geometry {
  int width = 3840;
  int height = 2160;
  Rational fps{25, 1};
  int frame_count = 1;

  // Throws ParameterError unless width/height are even and positive and
  // frame_count >= 1.
  void validate() const;
  bool operator==(const Geometry&) const = default;
};

// Parses "WxH".
Geometry parse_size(const std::string& text);

struct VideoFormat {
  int bit_depth = 10;
  SignalRange range = SignalRange::kNarrow;
  ChromaFormat chroma = ChromaFormat::k420;
};

struct Rect {
  int x = 0, y = 0, width = 0, height = 0;
  long long area() const { return static_cast<long long>(width) * height; }
  bool operator==(const Rect&) const = default;
};

// Centered rectangle with the frame's aspect ratio covering `percent` of
// the frame area, adjusted by at most one row to minimise the area error.
Rect window_rect(int width, int height, double percent);

struct NightSkySpec {
  double percent_white = 1;
  std::optional<int> peak_code;  // default: top of the nominal luma range
  std::uint64_t seed = 0;
};

struct WhiteWindowSpec {
  double area_percent = 10;
  std::optional<int> peak_code;
};

enum class RampOrientation { kHorizontal, kVertical };

struct GreyRampSpec {
  int levels = 1024;
  double window_percent = 100;
  RampOrientation orientation = RampOrientation::kHorizontal;
};

struct FlatFieldSpec {
  std::optional<std::string> hex;  // "#RRGGBB" or "RRGGBB"
  std::optional<int> code;         // luma code, neutral chroma
};

struct NoiseOverlaySpec {
  double sigma = 0;  // code-value units
  std::uint64_t seed = 0;
};

using PatternVariant = std::variant<NightSkySpec, WhiteWindowSpec, GreyRampSpec, FlatFieldSpec>;

struct PatternSpec {
  PatternVariant variant;
  VideoFormat format;
  std::optional<NoiseOverlaySpec> noise;
};

const char* pattern_kind(const PatternSpec& spec);

// Reproducibility record for a generated frame. Pixel accounting is over
// the luma (or first RGB) plane.
struct PatternManifest {
  std::string kind;
  nlohmann::json spec;
  std::uint64_t seed = 0;
  std::string prng;
  Geometry geometry;
  VideoFormat format;
  HdrSignalling signalling;
  int peak_code = 0;
  int base_code = 0;
  std::optional<Rect> region;
  std::map<int, std::uint64_t> luma_counts;
  std::optional<double> nominal_nits;
  std::vector<std::string> notes;

  std::uint64_t count_of(int code) const {
    auto it = luma_counts.find(code);
    return it == luma_counts.end() ? 0 : it->second;
  }
};

struct GeneratedPattern {
  Frame frame;
  PatternManifest manifest;
};

// Exactly round(p/100 * W * H) pixels at the peak code, positions drawn by
// a partial Fisher-Yates shuffle of pixel indices.
GeneratedPattern gen_night_sky(const NightSkySpec& spec, const Geometry& geom,
                               const VideoFormat& format = {});
GeneratedPattern gen_white_window(const WhiteWindowSpec& spec, const Geometry& geom,
                                  const VideoFormat& format = {});
GeneratedPattern gen_grey_ramp(const GreyRampSpec& spec, const Geometry& geom,
                               const VideoFormat& format = {10, SignalRange::kFull,
                                                            ChromaFormat::k420});
GeneratedPattern gen_flat(const FlatFieldSpec& spec, const Geometry& geom,
                          const VideoFormat& format = {10, SignalRange::kFull,
                                                       ChromaFormat::k420});

// Additive rounded Gaussian noise on every plane, clamped to the plane's
// nominal range. sigma == 0 returns the input unchanged.
Frame add_noise(const Frame& frame, double sigma, std::uint64_t seed);

GeneratedPattern generate(const PatternSpec& spec, const Geometry& geom);

// Recomputes the luma histogram of a frame (for manifest checks).
std::map<int, std::uint64_t> luma_histogram(const Frame& f);

// Peak code for a target display luminance, mapped through the inverse EOTF.
int peak_code_for_nits(double nits, int bit_depth, SignalRange range);

// Parses "#RRGGBB"; throws ParameterError when malformed.
std::array<int, 3> parse_hex_colour(const std::string& hex);

nlohmann::json to_json(const PatternSpec& spec);
PatternSpec pattern_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Geometry& g);
Geometry geometry_from_json(const nlohmann::json& j);
nlohmann::json to_json(const VideoFormat& f);
VideoFormat video_format_from_json(const nlohmann::json& j);

////////////////////////////////////////////////////////////////////////////////
// Playlists

inline constexpr std::array<double, 7> kNightSkyPercentages{1, 2, 5, 10, 20, 50, 80};
inline constexpr std::array<double, 4> kEbuWindowPercentages{4, 10, 25, 81};
inline constexpr std::array<double, 19> kWindowSweepPercentages{
    1, 2, 3, 4, 5, 7, 10, 12, 15, 20, 25, 30, 40, 50, 60, 75, 80, 90, 100};

struct PlaylistEntry {
  PatternSpec spec;
  double duration_s = 0;
  // Black shown before the pattern so the panel can cool off.
  double lead_in_black_s = 0;
  std::string label;
};

struct Playlist {
  std::string name;
  Geometry geometry;
  std::vector<PlaylistEntry> entries;

  double total_duration() const;
};

enum class SweepKind { kNightSky, kWindow, kEbuWindow, kSustained };

struct SweepRequest {
  SweepKind kind = SweepKind::kWindow;
  // nullopt: the default set for the kind. An explicit empty set is an error.
  std::optional<std::vector<double>> values;
  double entry_duration_s = 3;
  double lead_in_black_s = 300;
  double sustained_duration_s = 600;
  double sustained_window_percent = 1;
  std::uint64_t seed = 0;
  VideoFormat format;
};

// Throws ParameterError for an empty value set or non-positive durations.
Playlist build_playlist(const SweepRequest& request, const Geometry& geom);

nlohmann::json to_json(const Playlist& p);
Playlist playlist_from_json(const nlohmann::json& j);

std::optional<SweepKind> sweep_kind_from_name(const std::string& name);

}  // namespace hdrcheck

#endif  // HDRCHECK_PATTERNS_H
