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
#include <random>

#include <gtest/gtest.h>

#include "hdrcheck/error.h"
#include "hdrcheck/photometry.h"

namespace hdrcheck {
namespace {

MeasurementSample white(double t, double nits, std::optional<double> window = std::nullopt) {
  MeasurementSample s;
  s.t = t;
  s.luminance = nits;
  s.window_percent = window;
  return s;
}

////////////////////////////////////////////////////////////////////////////////
// Log format

std::size_t log_error_line(const std::string& text) {
  try {
    parse_measurement_log(text);
  } catch (const LogError& e) {
    return e.line();
  }
  return 0;
}

TEST(MeasurementLog, ParsesCommentsAndOptionalColumns) {
  const auto log = parse_measurement_log(std::string("# meter: test\n") + kLogHeader +
                                         "\n0,100.5,white,10,,\n1,0.01,black,,512,31.5\n");
  ASSERT_EQ(log.samples.size(), 2u);
  EXPECT_EQ(log.comments.at(0), "meter: test");
  EXPECT_EQ(log.samples[0].window_percent, 10.0);
  EXPECT_FALSE(log.samples[0].code_level);
  EXPECT_EQ(log.samples[1].probe, Probe::kBlack);
  EXPECT_EQ(log.samples[1].code_level, 512);
  EXPECT_EQ(log.samples[1].temperature, 31.5);
  EXPECT_EQ(log.of(Probe::kBlack).size(), 1u);
}

TEST(MeasurementLog, RoundTrips) {
  MeasurementLog log;
  log.comments = {"generated"};
  for (int i = 0; i < 20; ++i) {
    MeasurementSample s = white(i * 0.125, 1000.0 / (i + 1), i % 3 ? std::optional(2.5) : std::nullopt);
    if (i % 2) s.temperature = 25 + i * 0.1;
    if (i % 4 == 0) s.code_level = 64 + i;
    s.probe = i % 5 == 4 ? Probe::kFull : Probe::kWhite;
    log.samples.push_back(s);
  }
  const auto back = parse_measurement_log(serialize_measurement_log(log));
  EXPECT_EQ(back.samples, log.samples);
  EXPECT_EQ(back.comments, log.comments);
}

TEST(MeasurementLog, ErrorsCarryLineNumbers) {
  const std::string h = std::string(kLogHeader) + "\n";
  EXPECT_EQ(log_error_line(h + "0,1,white,,,\nx,1,white,,,\n"), 3u);
  EXPECT_EQ(log_error_line("# c\n" + h + "0,1,white,,\n"), 3u);
  EXPECT_EQ(log_error_line(h + "0,-1,white,,,\n"), 2u);
  EXPECT_EQ(log_error_line(h + "5,1,white,,,\n4,1,white,,,\n"), 3u);
  EXPECT_EQ(log_error_line(h + "0,1,grey,,,\n"), 2u);
  EXPECT_EQ(log_error_line(h + "0,1,white,101,,\n"), 2u);
  EXPECT_EQ(log_error_line(h + "0,1,white,,1.5,\n"), 2u);
  EXPECT_EQ(log_error_line(h + ",1,white,,,\n"), 2u);
  EXPECT_EQ(log_error_line("t,l\n0,1\n"), 1u);
  EXPECT_THROW(parse_measurement_log("# only a comment\n"), LogError);
}

TEST(MeasurementLog, ValidateInMemory) {
  MeasurementLog log;
  log.samples = {white(1, 10), white(0, 10)};
  EXPECT_THROW(validate_log(log), LogError);
  log.samples = {white(0, 10), white(1, -1)};
  EXPECT_THROW(validate_log(log), LogError);
}

////////////////////////////////////////////////////////////////////////////////
// Sustained

// 1600 nits for 100 s, a linear fall to 800 nits over the next 100 s, then
// flat until 400 s.
std::vector<MeasurementSample> ramp_down_log() {
  std::vector<MeasurementSample> s;
  for (int t = 0; t <= 400; ++t) {
    double l = 1600;
    if (t > 100) l = t < 200 ? 1600 - 8.0 * (t - 100) : 800;
    MeasurementSample m = white(t, l, 10.0);
    m.temperature = 25 + t * 0.05;
    s.push_back(m);
  }
  return s;
}

TEST(Sustained, AnalyticRampDown) {
  const auto r = analyze_sustained(ramp_down_log());
  EXPECT_DOUBLE_EQ(r.peak, 1600);
  EXPECT_DOUBLE_EQ(r.duration, 400);
  EXPECT_NEAR(r.time_above.at(1500), 112.5, 1e-9);
  EXPECT_NEAR(r.time_above.at(1000), 175.0, 1e-9);
  ASSERT_TRUE(r.decay_onset);
  // 0.9 * 1600 = 1440 is reached at t = 120; the first sample below it is 121.
  EXPECT_DOUBLE_EQ(*r.decay_onset, 121);
  EXPECT_DOUBLE_EQ(r.stabilized, 800);
  EXPECT_DOUBLE_EQ(*r.temperature_at_peak, 25 + 100 * 0.05);
  EXPECT_EQ(r.samples, 401u);
}

TEST(Sustained, TimesRelativeToFirstSample) {
  auto s = ramp_down_log();
  for (auto& x : s) x.t += 1000;
  const auto r = analyze_sustained(s);
  EXPECT_DOUBLE_EQ(*r.decay_onset, 121);
  EXPECT_NEAR(r.time_above.at(1500), 112.5, 1e-9);
}

TEST(Sustained, TransientDipIsNotDecay) {
  auto s = ramp_down_log();
  for (auto& x : s) {
    if (x.t > 100) x.luminance = 1600;
    if (x.t >= 50 && x.t < 55) x.luminance = 1000;
  }
  const auto r = analyze_sustained(s);
  EXPECT_FALSE(r.decay_onset);
  SustainedParams p;
  p.hold_s = 2;
  EXPECT_DOUBLE_EQ(*analyze_sustained(s, p).decay_onset, 50);
}

TEST(Sustained, TieOrderDoesNotMatter) {
  std::vector<MeasurementSample> s;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(900, 1700);
  for (int t = 0; t < 200; ++t)
    for (int k = 0; k < 3; ++k) s.push_back(white(t * 0.5, u(rng), 5.0));
  const auto base = analyze_sustained(s);
  for (int trial = 0; trial < 5; ++trial) {
    for (std::size_t i = 0; i < s.size(); i += 3) std::shuffle(s.begin() + i, s.begin() + i + 3, rng);
    const auto r = analyze_sustained(s);
    EXPECT_EQ(r.time_above, base.time_above);
    EXPECT_EQ(r.decay_onset, base.decay_onset);
    EXPECT_EQ(r.stabilized, base.stabilized);
  }
}

TEST(Sustained, TimeAboveIsMonotoneInThreshold) {
  const auto s = ramp_down_log();
  double prev = 1e9;
  for (double th = 0; th <= 1700; th += 50) {
    const double t = time_above(s, th);
    EXPECT_LE(t, prev);
    prev = t;
  }
  EXPECT_DOUBLE_EQ(time_above(s, 0), 400);
  EXPECT_DOUBLE_EQ(time_above(s, 1601), 0);
}

TEST(Sustained, Errors) {
  EXPECT_THROW(analyze_sustained(std::vector{white(0, 1)}), LogError);
  EXPECT_THROW(analyze_sustained(std::vector{white(0, 1, 1.0), white(1, 1, 2.0)}), LogError);
  EXPECT_THROW(analyze_sustained(std::vector{white(2, 1), white(1, 1)}), LogError);
  SustainedParams p;
  p.decay_fraction = 1.2;
  EXPECT_THROW(analyze_sustained(ramp_down_log(), p), ParameterError);
}

TEST(Sustained, ProbeSelection) {
  auto s = ramp_down_log();
  for (auto& x : s) x.probe = Probe::kFull;
  EXPECT_DOUBLE_EQ(analyze_sustained(s).peak, 1600);
  s[0].probe = Probe::kBlack;
  EXPECT_THROW(analyze_sustained(s), LogError);
  SustainedParams p;
  p.probe = Probe::kFull;
  EXPECT_EQ(analyze_sustained(s, p).samples, 400u);
}

////////////////////////////////////////////////////////////////////////////////
// Window sweep

double abl_curve(double s) { return std::min(1000.0, 1000.0 * std::pow(10.0 / s, 0.3)); }

MeasurementLog sweep_log(std::vector<double> sizes, unsigned seed = 1) {
  MeasurementLog log;
  std::mt19937 rng(seed);
  std::normal_distribution<double> noise(0, 2);
  double t = 0;
  for (double s : sizes) {
    for (int i = 0; i < 5; ++i) log.samples.push_back(white(t++, 0));
    // Rising edge settles inside the first half of the plateau.
    for (int i = 0; i < 20; ++i)
      log.samples.push_back(white(t++, i < 4 ? 200.0 * i : abl_curve(s) + noise(rng), s));
  }
  return log;
}

const std::vector<double> kSizes{1, 2, 5, 10, 12, 15, 20, 30, 50, 100};

TEST(WindowSweep, RecoversCurve) {
  const auto r = analyze_window_sweep(sweep_log(kSizes));
  ASSERT_EQ(r.curve.size(), kSizes.size());
  for (const auto& [s, l] : r.curve) EXPECT_NEAR(l, abl_curve(s), 3.0) << s;
  EXPECT_NEAR(r.peak, 1000, 3);
  EXPECT_EQ(r.knee, 10);
  // 1000 (10/S)^0.3 >= 900 up to S = 14.2.
  EXPECT_EQ(r.max_window_at(900), 12);
  EXPECT_EQ(r.max_window_at(400), 100);
  EXPECT_FALSE(r.max_window_at(1100));
  EXPECT_TRUE(r.warnings.empty());
}

TEST(WindowSweep, MaxWindowIsMonotoneInLevel) {
  const auto r = analyze_window_sweep(sweep_log(kSizes, 3));
  double prev = 101;
  for (double level = 0; level <= 1000; level += 25) {
    const double s = r.max_window_at(level).value_or(0);
    EXPECT_LE(s, prev);
    prev = s;
  }
}

TEST(WindowSweep, RepeatedSizesAverageAndWarn) {
  MeasurementLog log = sweep_log({1, 5, 10, 20});
  const MeasurementLog again = sweep_log({10});
  const double t0 = log.samples.back().t + 1;
  for (auto s : again.samples) {
    s.t += t0;
    if (s.window_percent) s.luminance *= 0.8;
    log.samples.push_back(s);
  }
  const auto r = analyze_window_sweep(log);
  EXPECT_EQ(r.curve.size(), 4u);
  EXPECT_NEAR(r.curve.at(10), 900, 3);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(WindowSweep, NeedsFourSizes) {
  EXPECT_THROW(analyze_window_sweep(sweep_log({1, 2, 3})), LogError);
}

TEST(WindowSweep, SteadyStateUsesLastHalf) {
  EXPECT_DOUBLE_EQ(steady_state({0, 0, 0, 10, 10, 10}), 10);
  EXPECT_DOUBLE_EQ(steady_state({5}), 5);
  EXPECT_DOUBLE_EQ(steady_state({0, 1, 2, 3}), 2.5);
  EXPECT_THROW(steady_state({}), ParameterError);
}

////////////////////////////////////////////////////////////////////////////////
// EOTF tracking

std::vector<EotfSample> scaled_eotf(double factor) {
  std::vector<EotfSample> s;
  for (int code = 64; code <= 940; code += 16) {
    const double ideal = pq_signal_to_nits(dequantize(CodeValue{code, 10, SignalRange::kNarrow}, PlaneKind::kLuma));
    s.push_back({code, ideal * factor});
  }
  return s;
}

TEST(EotfTracking, ConstantRelativeError) {
  const auto r = analyze_eotf_tracking(scaled_eotf(1.05));
  EXPECT_EQ(r.points.size(), 55u);
  EXPECT_FALSE(r.points.front().deviation_pct);  // code 64 is 0 nits
  EXPECT_EQ(r.all.count, 54u);
  EXPECT_NEAR(r.all.max_abs_pct, 5, 1e-9);
  EXPECT_NEAR(r.all.mean_pct, 5, 1e-9);
  EXPECT_EQ(r.low.count + r.high.count, r.all.count);
  EXPECT_GT(r.low.count, 0u);
  EXPECT_GT(r.high.count, 0u);
}

TEST(EotfTracking, PerfectDisplay) {
  const auto r = analyze_eotf_tracking(scaled_eotf(1.0));
  EXPECT_LT(r.all.max_abs_pct, 1e-9);
}

TEST(EotfTracking, PeakAnchorExcludesClippedCodes) {
  auto s = scaled_eotf(1.0);
  for (auto& x : s) x.luminance = std::min(x.luminance, 1000.0);
  EotfParams p;
  EXPECT_GT(analyze_eotf_tracking(s, p).all.max_abs_pct, 50);
  p.peak_anchor = 1000;
  const auto r = analyze_eotf_tracking(s, p);
  EXPECT_LT(r.all.max_abs_pct, 1e-9);
  EXPECT_TRUE(std::any_of(r.points.begin(), r.points.end(), [](const auto& x) { return x.beyond_anchor; }));
}

TEST(EotfTracking, Errors) {
  EXPECT_THROW(analyze_eotf_tracking(std::vector<EotfSample>{{100, 1}, {200, 2}}), ParameterError);
  EXPECT_THROW(analyze_eotf_tracking(std::vector<EotfSample>{{10, 1}, {200, 2}, {300, 3}}), ParameterError);
  EotfParams full;
  full.range = SignalRange::kFull;
  EXPECT_NO_THROW(analyze_eotf_tracking(std::vector<EotfSample>{{10, 1}, {200, 2}, {300, 3}}, full));
}

////////////////////////////////////////////////////////////////////////////////
// Local dimming

MeasurementLog night_sky_log(double black_slope, double black_floor) {
  MeasurementLog log;
  double t = 0;
  for (double p : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 80.0}) {
    for (int i = 0; i < 4; ++i) log.samples.push_back(white(t++, 0));
    for (int i = 0; i < 6; ++i) {
      MeasurementSample b = white(t, black_floor + black_slope * p, p);
      b.probe = Probe::kBlack;
      log.samples.push_back(b);
      log.samples.push_back(white(t++, 1000 - 5 * p, p));
    }
  }
  return log;
}

TEST(LocalDimming, BloomingIsPoor) {
  const auto r = analyze_local_dimming(night_sky_log(2.5, 0.05));
  EXPECT_EQ(r.classification, DimmingClass::kPoor);
  EXPECT_NEAR(r.black_fit.slope, 2.5, 1e-9);
  EXPECT_NEAR(r.black_fit.r, 1, 1e-9);
  EXPECT_NEAR(r.white_peak, 995, 1e-9);
  EXPECT_NEAR(r.normalized_black_slope, 2.5 / 995, 1e-12);
  EXPECT_EQ(r.notes.size(), 2u);
}

TEST(LocalDimming, FlatBlackIsGood) {
  const auto r = analyze_local_dimming(night_sky_log(0, 0.0005));
  EXPECT_EQ(r.classification, DimmingClass::kGood);
  EXPECT_EQ(r.black_fit.r, 0);
  EXPECT_EQ(r.black.size(), 7u);
}

TEST(LocalDimming, ClassifierThresholds) {
  DimmingReport r;
  r.normalized_black_slope = 0.002;
  r.black_fit.r = 0.9;
  EXPECT_EQ(classify_dimming(r), DimmingClass::kPoor);
  r.black_fit.r = 0.5;
  EXPECT_EQ(classify_dimming(r), DimmingClass::kGood);
  r.black_fit.r = 0.9;
  r.normalized_black_slope = 0.0005;
  EXPECT_EQ(classify_dimming(r), DimmingClass::kGood);
}

TEST(LocalDimming, UnpairedProbeIsRejected) {
  MeasurementLog log = night_sky_log(1, 0);
  log.samples.push_back(white(1e4, 900, 90.0));
  EXPECT_THROW(analyze_local_dimming(log), LogError);
}

TEST(LinearFitTest, ExactLineAndErrors) {
  const auto f = fit_line({1, 2, 3, 4}, {3, 5, 7, 9});
  EXPECT_NEAR(f.slope, 2, 1e-12);
  EXPECT_NEAR(f.intercept, 1, 1e-12);
  EXPECT_NEAR(f.r, 1, 1e-12);
  EXPECT_NEAR(f.residual_rms, 0, 1e-12);
  EXPECT_NEAR(fit_line({1, 2, 3}, {3, 2, 1}).r, -1, 1e-12);
  EXPECT_THROW(fit_line({1, 1}, {1, 2}), ParameterError);
  EXPECT_THROW(fit_line({1, 2}, {1}), ParameterError);
}

////////////////////////////////////////////////////////////////////////////////
// Cool-off

std::vector<TemperatureSample> cooling(double ambient, double amplitude, double tau, double until) {
  std::vector<TemperatureSample> s{{-60, ambient + amplitude * 0.6}, {-30, ambient + amplitude * 0.9}};
  for (double t = 0; t <= until; t += 5) s.push_back({t, ambient + amplitude * std::exp(-t / tau)});
  return s;
}

TEST(Cooloff, ExponentialWait) {
  const auto r = cooloff_recommendation(cooling(25, 30, 120, 30), 40);
  EXPECT_EQ(r.status, CooloffStatus::kWait);
  // Reaches 40 C at 120 ln 2 s after the peak.
  EXPECT_NEAR(r.wait_s, 120 * std::log(2.0) - 30, 0.05);
  EXPECT_NEAR(*r.ambient, 25, 1e-3);
  EXPECT_NEAR(*r.tau_s, 120, 0.05);
  EXPECT_EQ(r.segment_samples, 7u);
}

TEST(Cooloff, Statuses) {
  EXPECT_EQ(cooloff_recommendation(cooling(25, 30, 120, 200), 40).status, CooloffStatus::kSafe);
  EXPECT_EQ(cooloff_recommendation(cooling(45, 10, 60, 60), 40).status, CooloffStatus::kUnreachable);
  std::vector<TemperatureSample> rising{{0, 41}, {10, 42}, {20, 43}};
  EXPECT_EQ(cooloff_recommendation(rising, 40).status, CooloffStatus::kNotCooling);
  const auto two = cooloff_recommendation({{0, 50}, {10, 48}}, 40);
  EXPECT_EQ(two.status, CooloffStatus::kWait);
  EXPECT_DOUBLE_EQ(two.wait_s, 40);
}

TEST(Cooloff, Errors) {
  EXPECT_THROW(cooloff_recommendation(std::vector<TemperatureSample>{{0, 50}}), LogError);
  EXPECT_THROW(cooloff_recommendation({{10, 50}, {0, 48}}), LogError);
  EXPECT_THROW(cooloff_recommendation(MeasurementLog{}), LogError);
}

}  // namespace
}  // namespace hdrcheck
