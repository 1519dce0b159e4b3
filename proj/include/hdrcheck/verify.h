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

#ifndef HDRCHECK_VERIFY_H
#define HDRCHECK_VERIFY_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdrcheck/frame.h"
#include "hdrcheck/patterns.h"

namespace hdrcheck {

////////////////////////////////////////////////////////////////////////////////
// Signalling policy

enum class Verdict { kPass, kWarn, kFail };
const char* to_string(Verdict v);

enum class MetadataRequirement { kIgnore, kWarn, kRequire };
const char* to_string(MetadataRequirement r);
std::optional<MetadataRequirement> metadata_requirement_from_name(const std::string& name);

struct SignallingPolicy {
  int transfer = cicp::kTransferPq;
  int primaries = cicp::kPrimariesBt2020;
  int matrix = cicp::kMatrixBt2020Ncl;
  int min_bit_depth = 10;
  MetadataRequirement mastering_display = MetadataRequirement::kWarn;
  MetadataRequirement content_light = MetadataRequirement::kWarn;

  // Throws ParameterError for codes outside their H.273 enumerations.
  void validate() const;
};

struct ClauseResult {
  std::string clause;  // "transfer", "primaries", "matrix", "bit_depth", "mdcv", "clli"
  Verdict verdict = Verdict::kPass;
  std::string reason;  // empty on a clean pass
};

struct SignallingReport {
  std::vector<ClauseResult> clauses;

  // Fail iff any clause fails; warn iff any clause warns.
  Verdict overall() const;
  std::vector<ClauseResult> violations() const;
  std::vector<ClauseResult> warnings() const;
};

// Pure function of its inputs. Absent boxes are findings, never errors.
SignallingReport verify_signalling(const HdrSignalling& sig, int bit_depth,
                                   const SignallingPolicy& policy = {});

////////////////////////////////////////////////////////////////////////////////
// Signal statistics

struct PlaneStats {
  int min = 0;
  int max = 0;
  std::uint64_t count = 0;
  std::uint64_t sum = 0;
  // Samples outside the nominal narrow range; zero for full-range frames.
  std::uint64_t below_nominal = 0;
  std::uint64_t above_nominal = 0;
  std::vector<std::uint64_t> histogram;  // indexed by code

  double mean() const { return count ? static_cast<double>(sum) / count : 0.0; }
  std::uint64_t violations() const { return below_nominal + above_nominal; }
};

struct SignalStats {
  std::size_t frames = 0;
  int bit_depth = 0;
  SignalRange range = SignalRange::kNarrow;
  ColorModel model = ColorModel::kYcbcr;
  std::array<PlaneStats, 3> planes;

  // Order-independent combination; both sides must describe the same format.
  SignalStats& merge(const SignalStats& other);
};

// Throws ParameterError for an empty list or mixed formats.
SignalStats signal_stats(const std::vector<Frame>& frames);
SignalStats signal_stats(const Frame& frame);

////////////////////////////////////////////////////////////////////////////////
// Bit depth and banding

enum class Confidence { kHigh, kLow, kNoiseMasked };
const char* to_string(Confidence c);

// Ratio of noise sigma to step size at or above which decimation is
// considered hidden by noise, and below which the estimate is trusted.
inline constexpr double kNoiseMaskedRatio = 0.5;
inline constexpr double kLowConfidenceRatio = 0.1;

struct BitDepthReport {
  int container_bits = 0;
  std::size_t distinct_levels = 0;
  int step_gcd = 1;
  double effective_bits = 0;
  double noise_sigma_estimate = 0;  // code steps
  // Step implied by the noise-robust ramp profile, when it exceeds step_gcd.
  std::optional<int> candidate_step;
  Confidence confidence = Confidence::kHigh;
};

// Analyses plane `plane` inside `region` (whole plane by default). Throws
// InsufficientSignalError when the region holds fewer than two distinct
// codes and ParameterError when the region leaves the plane.
BitDepthReport estimate_effective_bitdepth(const Frame& frame, std::optional<Rect> region = {},
                                           int plane = 0);

struct BandingReport {
  RampOrientation orientation = RampOrientation::kHorizontal;
  std::size_t band_count = 0;
  double mean_band_width = 0;
  int min_band_width = 0;
  int max_band_width = 0;
  std::vector<int> edges;  // offsets from the region origin along the gradient
  bool monotone = true;
  std::vector<std::string> warnings;
};

// Band edges of the per-column (or per-row) rounded mean profile. Orientation is
// inferred from the profile with the larger range unless given.
BandingReport detect_banding(const Frame& frame, std::optional<Rect> region = {},
                             std::optional<RampOrientation> orientation = {}, int plane = 0);

////////////////////////////////////////////////////////////////////////////////
// Conversion fidelity

struct ChannelFidelity {
  double mse = 0;
  double psnr_db = 0;  // +inf when identical
  bool identical = true;
  double max_abs_error = 0;
};

struct FidelityReport {
  std::array<ChannelFidelity, 3> channels;
  double max_abs_error = 0;
  // Mean per-pixel Euclidean distance between linear-light RGB triples
  // decoded through the PQ EOTF.
  double mean_linear_distance_nits = 0;

  bool identical() const;
  double min_psnr_db() const;
};

// Both frames must be RGB 4:4:4 with equal geometry. Components are
// normalized to [0, 1] per the frame's range before comparison.
FidelityReport roundtrip_fidelity(const Frame& reference, const Frame& reconstructed);

}  // namespace hdrcheck

#endif  // HDRCHECK_VERIFY_H
