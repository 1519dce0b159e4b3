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
#include <sstream>

#include "hdrcheck/error.h"
#include "hdrcheck/panelsim.h"
#include "hdrcheck/prng.h"

namespace hdrcheck {

namespace {

// Emitted values are rounded so logs serialize to short, stable decimals.
double round_to(double v, double quantum) { return std::round(v / quantum) * quantum; }

// What a probe sees of one static frame, in units of the panel's peak.
struct ProbeView {
  bool present = true;
  int code = 0;
  double signal = 0;    // pq(code) / 10000
  double leak_load = 0;  // mean linear light of the probe zone and its neighbours
};

struct EntryState {
  double mean_light = 0;  // A
  std::optional<double> window_percent;
  std::vector<ProbeView> probes;
};

class FrameAnalyzer {
 public:
  FrameAnalyzer(const PanelProfile& profile, const std::vector<ProbeSpec>& probes)
      : profile_(profile), probes_(probes) {}

  EntryState analyze(const Frame& f) {
    if (lut_.size() != static_cast<std::size_t>(f.max_code()) + 1 || lut_depth_ != f.bit_depth ||
        lut_range_ != f.range) {
      lut_.resize(static_cast<std::size_t>(f.max_code()) + 1);
      for (int c = 0; c <= f.max_code(); ++c)
        lut_[c] = pq_signal_to_nits(dequantize(CodeValue{c, f.bit_depth, f.range},
                                               PlaneKind::kLuma)) /
                  pq::kPeakNits;
      lut_depth_ = f.bit_depth;
      lut_range_ = f.range;
    }
    const Plane& y = f.planes[0];
    const int zx = profile_.dimming.zones_x, zy = profile_.dimming.zones_y;
    std::vector<double> zone_sum(static_cast<std::size_t>(zx) * zy, 0.0);
    std::vector<std::uint64_t> zone_n(zone_sum.size(), 0);
    double total = 0;
    for (int r = 0; r < y.height; ++r) {
      const int zr = std::min(zy - 1, r * zy / y.height);
      for (int c = 0; c < y.width; ++c) {
        const double l = lut_[y.at(c, r)];
        const std::size_t z = static_cast<std::size_t>(zr) * zx + std::min(zx - 1, c * zx / y.width);
        zone_sum[z] += l;
        ++zone_n[z];
        total += l;
      }
    }
    EntryState e;
    e.mean_light = total / (static_cast<double>(y.width) * y.height);
    const int black = nominal_min_code(f.bit_depth, f.range, PlaneKind::kLuma);
    for (const ProbeSpec& p : probes_) {
      ProbeView v;
      int lo = y.at(p.region.x, p.region.y), hi = lo;
      double sum = 0;
      for (int r = p.region.y; r < p.region.y + p.region.height; ++r)
        for (int c = p.region.x; c < p.region.x + p.region.width; ++c) {
          const int code = y.at(c, r);
          lo = std::min(lo, code);
          hi = std::max(hi, code);
          sum += lut_[code];
        }
      switch (p.kind) {
        case Probe::kWhite:
          v.present = hi > black;
          v.code = hi;
          v.signal = lut_[hi];
          break;
        case Probe::kBlack:
          v.code = lo;
          v.signal = lut_[lo];
          break;
        case Probe::kFull:
          v.code = -1;
          v.signal = sum / p.region.area();
          break;
      }
      // Nearest-neighbour zone coupling around the zone holding the probe centre.
      const int cx = p.region.x + p.region.width / 2, cy = p.region.y + p.region.height / 2;
      const int pzx = std::min(zx - 1, cx * zx / y.width), pzy = std::min(zy - 1, cy * zy / y.height);
      double load = 0;
      std::uint64_t n = 0;
      for (int dz = -1; dz <= 1; ++dz)
        for (int dx = -1; dx <= 1; ++dx) {
          const int qx = pzx + dx, qy = pzy + dz;
          if (qx < 0 || qy < 0 || qx >= zx || qy >= zy) continue;
          const std::size_t z = static_cast<std::size_t>(qy) * zx + qx;
          load += zone_sum[z];
          n += zone_n[z];
        }
      v.leak_load = n ? load / n : 0;
      e.probes.push_back(v);
    }
    return e;
  }

 private:
  const PanelProfile& profile_;
  const std::vector<ProbeSpec>& probes_;
  std::vector<double> lut_;
  int lut_depth_ = 0;
  SignalRange lut_range_ = SignalRange::kNarrow;
};

std::optional<double> pattern_window(const PatternSpec& spec) {
  if (auto* w = std::get_if<WhiteWindowSpec>(&spec.variant)) return w->area_percent;
  if (auto* n = std::get_if<NightSkySpec>(&spec.variant)) return n->percent_white;
  return std::nullopt;
}

}  // namespace

std::vector<ProbeSpec> default_probes(const Geometry& geom) {
  const int w = std::max(1, geom.width / 20), h = std::max(1, geom.height / 20);
  return {{"white", {(geom.width - w) / 2, (geom.height - h) / 2, w, h}, Probe::kWhite},
          {"black", {geom.width / 40, geom.height / 40, w, h}, Probe::kBlack}};
}

MeasurementLog simulate(const Playlist& playlist, const PanelProfile& profile,
                        const std::vector<ProbeSpec>& probes, const SimOptions& options) {
  profile.validate();
  if (!(options.dt > 0)) throw ParameterError("time step must be positive");
  if (options.noise_fraction < 0) throw ParameterError("noise fraction must be non-negative");
  if (playlist.entries.empty()) throw ParameterError("playlist has no entries");
  if (probes.empty()) throw ParameterError("at least one probe is required");
  const Geometry& g = playlist.geometry;
  g.validate();
  for (const ProbeSpec& p : probes) {
    const Rect& r = p.region;
    if (r.width <= 0 || r.height <= 0 || r.x < 0 || r.y < 0 || r.x + r.width > g.width ||
        r.y + r.height > g.height)
      throw ParameterError("probe '" + p.id + "' lies outside the " + std::to_string(g.width) +
                           "x" + std::to_string(g.height) + " frame");
  }

  FrameAnalyzer analyzer(profile, probes);
  // Lead-in black matches the format of the entry it precedes.
  auto black_state = [&](const VideoFormat& fmt) {
    const Frame f = Frame::make(g.width, g.height, fmt.bit_depth, fmt.chroma, ColorModel::kYcbcr,
                                fmt.range);
    return analyzer.analyze(f);
  };

  MeasurementLog log;
  {
    std::ostringstream c;
    c.precision(17);
    c << "hdrcheck panelsim profile=" << profile.name << " dt=" << options.dt
      << " seed=" << options.seed << " noise=" << options.noise_fraction;
    log.comments.push_back(c.str());
  }
  Xoshiro256 rng(derive_seed(options.seed, "panelsim/noise"));

  const double peak = profile.peak_small_window;
  double temperature = profile.thermal.t_ambient;
  std::uint64_t step = 0;

  auto run = [&](const EntryState& e, double duration) {
    const auto steps = static_cast<std::uint64_t>(std::llround(duration / options.dt));
    const double m_abl = profile.abl_multiplier(100.0 * e.mean_light);
    for (std::uint64_t k = 0; k < steps; ++k, ++step) {
      const double m = m_abl * profile.thermal_multiplier(temperature);
      const double t = round_to(static_cast<double>(step) * options.dt, 1e-6);
      for (std::size_t i = 0; i < probes.size(); ++i) {
        const ProbeView& v = e.probes[i];
        if (!v.present) continue;
        double l = v.signal * peak * m;
        if (probes[i].kind == Probe::kBlack)
          l += profile.dimming.leak_fraction * v.leak_load * peak + profile.dimming.black_floor;
        if (options.noise_fraction > 0) l *= 1.0 + options.noise_fraction * rng.gaussian();
        l = std::clamp(l, 0.0, peak);
        MeasurementSample s;
        s.t = t;
        s.luminance = round_to(l, 1e-6);
        s.probe = probes[i].kind;
        s.window_percent = e.window_percent;
        if (v.code >= 0) s.code_level = v.code;
        s.temperature = round_to(temperature, 1e-6);
        log.samples.push_back(s);
      }
      const ThermalModel& th = profile.thermal;
      temperature += options.dt * (th.k_heat * e.mean_light * m - th.k_cool * (temperature - th.t_ambient));
    }
  };

  for (const PlaylistEntry& entry : playlist.entries) {
    if (entry.lead_in_black_s > 0) run(black_state(entry.spec.format), entry.lead_in_black_s);
    GeneratedPattern pat = generate(entry.spec, g);
    EntryState e = analyzer.analyze(pat.frame);
    e.window_percent = pattern_window(entry.spec);
    run(e, entry.duration_s);
  }
  return log;
}

}  // namespace hdrcheck
