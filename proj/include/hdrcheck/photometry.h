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

#ifndef HDRCHECK_PHOTOMETRY_H
#define HDRCHECK_PHOTOMETRY_H

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hdrcheck/colorimetry.h"

namespace hdrcheck {

////////////////////////////////////////////////////////////////////////////////
// Measurement logs
//
// CSV with the header
//   t_s,luminance_nits,probe,window_pct,code_level,temp_c
// Lines starting with '#' are comments. window_pct, code_level and temp_c
// may be empty.

enum class Probe { kWhite, kBlack, kFull };
const char* to_string(Probe p);
std::optional<Probe> probe_from_name(const std::string& name);

struct MeasurementSample {
  double t = 0;          // seconds
  double luminance = 0;  // nits
  Probe probe = Probe::kWhite;
  std::optional<double> window_percent;
  std::optional<int> code_level;
  std::optional<double> temperature;  // degrees C

  bool operator==(const MeasurementSample&) const = default;
};

struct MeasurementLog {
  std::vector<MeasurementSample> samples;
  std::vector<std::string> comments;  // without the leading '#'

  // Samples of one probe, in log order.
  std::vector<MeasurementSample> of(Probe p) const;
};

inline constexpr const char* kLogHeader = "t_s,luminance_nits,probe,window_pct,code_level,temp_c";

// Throws LogError with the 1-based line number for malformed rows,
// negative values or decreasing timestamps.
MeasurementLog parse_measurement_log(const std::string& text);
MeasurementLog read_measurement_log(const std::filesystem::path& path);
std::string serialize_measurement_log(const MeasurementLog& log);
void write_measurement_log(const MeasurementLog& log, const std::filesystem::path& path);
// Checks the same invariants as the parser on an in-memory log.
void validate_log(const MeasurementLog& log);

////////////////////////////////////////////////////////////////////////////////
// Sustained brightness

struct SustainedParams {
  std::vector<double> thresholds{1000, 1500};
  double decay_fraction = 0.9;
  double hold_s = 10;
  // Probe to analyse; by default white if present, else the only probe.
  std::optional<Probe> probe;
};

struct SustainedReport {
  double peak = 0;
  double duration = 0;
  std::map<double, double> time_above;  // threshold -> seconds
  // Times relative to the first sample.
  std::optional<double> decay_onset;
  double stabilized = 0;
  std::optional<double> temperature_at_peak;
  std::size_t samples = 0;
};

// Times are taken relative to the first sample; samples sharing a
// timestamp are ordered by luminance so the result does not depend on log
// order. Throws LogError with fewer than two samples, decreasing time or a
// varying window size.
SustainedReport analyze_sustained(const std::vector<MeasurementSample>& samples,
                                  const SustainedParams& params = {});
SustainedReport analyze_sustained(const MeasurementLog& log, const SustainedParams& params = {});

// Time during which the linearly interpolated series is at or above
// `threshold`.
double time_above(const std::vector<MeasurementSample>& sorted, double threshold);

////////////////////////////////////////////////////////////////////////////////
// Window-size sweep

struct WindowSweepReport {
  std::map<double, double> curve;  // S% -> steady-state nits
  double peak = 0;
  double knee = 0;
  std::vector<std::string> warnings;

  // Largest measured S whose level is at least `level`.
  std::optional<double> max_window_at(double level) const;
};

// Groups consecutive samples of the white probe by window_pct into
// plateaus; each plateau contributes the median of its last half. Samples
// without a window size (black lead-ins) are skipped. Throws LogError with
// fewer than four sizes.
WindowSweepReport analyze_window_sweep(const MeasurementLog& log);

// Median of the last half of `values` (at least one element).
double steady_state(std::vector<double> values);

////////////////////////////////////////////////////////////////////////////////
// EOTF tracking

struct EotfSample {
  int code = 0;
  double luminance = 0;
};

struct EotfParams {
  int bit_depth = 10;
  SignalRange range = SignalRange::kNarrow;
  // Samples whose ideal luminance exceeds the anchor are listed but left
  // out of the summary statistics.
  double peak_anchor = pq::kPeakNits;
  double split_nits = 100;
};

struct EotfPoint {
  int code = 0;
  double ideal = 0;
  double measured = 0;
  std::optional<double> deviation_pct;  // nullopt where the ideal is 0 nits
  bool beyond_anchor = false;
};

struct DeviationSummary {
  std::size_t count = 0;
  double max_abs_pct = 0;
  double mean_abs_pct = 0;
  double mean_pct = 0;
};

struct EotfReport {
  std::vector<EotfPoint> points;
  DeviationSummary all;
  DeviationSummary low;   // ideal below split_nits
  DeviationSummary high;  // ideal at or above split_nits
};

// Throws ParameterError for codes outside the nominal luma range or with
// fewer than three distinct codes.
EotfReport analyze_eotf_tracking(const std::vector<EotfSample>& samples,
                                 const EotfParams& params = {});
// Uses every sample carrying a code level.
EotfReport analyze_eotf_tracking(const MeasurementLog& log, const EotfParams& params = {});

////////////////////////////////////////////////////////////////////////////////
// Local dimming

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r = 0;             // 0 when either variable is constant
  double residual_rms = 0;
};

// Ordinary least squares; needs at least two distinct x values.
LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

enum class DimmingClass { kGood, kPoor };
const char* to_string(DimmingClass c);

struct DimmingParams {
  // Black-probe slope relative to the white-probe peak, per percentage point.
  double normalized_slope_threshold = 0.001;
  double min_correlation = 0.8;
};

struct DimmingReport {
  std::map<double, double> black;  // p% -> steady-state nits
  std::map<double, double> white;
  LinearFit black_fit;
  LinearFit white_fit;
  double white_peak = 0;
  double normalized_black_slope = 0;
  DimmingClass classification = DimmingClass::kGood;
  std::vector<std::string> notes;
};

// Derives the class from the fit fields alone.
DimmingClass classify_dimming(const DimmingReport& r, const DimmingParams& params = {});

// window_pct carries the night-sky percentage. Throws LogError when a
// percentage lacks either probe or fewer than three percentages exist.
DimmingReport analyze_local_dimming(const MeasurementLog& log, const DimmingParams& params = {});

////////////////////////////////////////////////////////////////////////////////
// Cool-off

enum class CooloffStatus { kSafe, kWait, kNotCooling, kUnreachable };
const char* to_string(CooloffStatus s);

struct TemperatureSample {
  double t = 0;
  double temperature = 0;
};

struct CooloffReport {
  CooloffStatus status = CooloffStatus::kSafe;
  double wait_s = 0;  // from the last sample; meaningful for kSafe and kWait
  double last_temperature = 0;
  std::optional<double> ambient;  // fitted asymptote
  std::optional<double> tau_s;
  std::size_t segment_samples = 0;
};

// Fits T(t) = Ta + B exp(-(t - t0) / tau) to the segment after the last
// temperature maximum. Throws LogError with fewer than two samples.
CooloffReport cooloff_recommendation(const std::vector<TemperatureSample>& series,
                                     double t_safe = 40);
CooloffReport cooloff_recommendation(const MeasurementLog& log, double t_safe = 40);

}  // namespace hdrcheck

#endif  // HDRCHECK_PHOTOMETRY_H
