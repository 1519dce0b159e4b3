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
#include <iterator>
#include <string>

#include "hdrcheck/error.h"
#include "hdrcheck/verify.h"

namespace hdrcheck {

namespace {

std::string primaries_name(int code) {
  switch (code) {
    case 1: return "BT.709";
    case 2: return "unspecified";
    case 4: return "BT.470M";
    case 5: return "BT.601-625";
    case 6: return "BT.601-525";
    case 9: return "BT.2020";
    case 11: return "DCI-P3";
    case 12: return "P3-D65";
    default: return "code " + std::to_string(code);
  }
}

std::string transfer_name(int code) {
  switch (code) {
    case 1: return "BT.709";
    case 2: return "unspecified";
    case 13: return "sRGB";
    case 14: return "BT.2020-10";
    case 15: return "BT.2020-12";
    case 16: return "PQ";
    case 18: return "HLG";
    default: return "code " + std::to_string(code);
  }
}

std::string matrix_name(int code) {
  switch (code) {
    case 0: return "identity";
    case 1: return "BT.709";
    case 2: return "unspecified";
    case 5: case 6: return "BT.601";
    case 9: return "BT.2020-NCL";
    case 10: return "BT.2020-CL";
    case 14: return "ICtCp";
    default: return "code " + std::to_string(code);
  }
}

bool valid_primaries(int c) { return c == 1 || c == 2 || (c >= 4 && c <= 12) || c == 22; }
bool valid_transfer(int c) { return c == 1 || c == 2 || (c >= 4 && c <= 18); }
bool valid_matrix(int c) { return c == 0 || c == 1 || c == 2 || (c >= 4 && c <= 14); }

ClauseResult code_clause(const char* clause, const char* label, int found, int expected,
                         std::string (*name)(int)) {
  if (found == expected) return {clause, Verdict::kPass, ""};
  return {clause, Verdict::kFail,
          std::string(label) + " not " + name(expected) + ": found " + std::to_string(found) +
              " (" + name(found) + "), expected " + std::to_string(expected)};
}

ClauseResult presence_clause(const char* clause, const char* box, bool present,
                             MetadataRequirement req) {
  if (present || req == MetadataRequirement::kIgnore) return {clause, Verdict::kPass, ""};
  const Verdict v = req == MetadataRequirement::kRequire ? Verdict::kFail : Verdict::kWarn;
  return {clause, v, std::string(box) + " absent"};
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kWarn: return "warn";
    case Verdict::kFail: return "fail";
  }
  return "?";
}

const char* to_string(MetadataRequirement r) {
  switch (r) {
    case MetadataRequirement::kIgnore: return "ignore";
    case MetadataRequirement::kWarn: return "warn";
    case MetadataRequirement::kRequire: return "require";
  }
  return "?";
}

std::optional<MetadataRequirement> metadata_requirement_from_name(const std::string& name) {
  if (name == "ignore") return MetadataRequirement::kIgnore;
  if (name == "warn") return MetadataRequirement::kWarn;
  if (name == "require") return MetadataRequirement::kRequire;
  return std::nullopt;
}

void SignallingPolicy::validate() const {
  if (!valid_transfer(transfer))
    throw ParameterError("transfer code " + std::to_string(transfer) + " is not a valid H.273 value");
  if (!valid_primaries(primaries))
    throw ParameterError("primaries code " + std::to_string(primaries) +
                         " is not a valid H.273 value");
  if (!valid_matrix(matrix))
    throw ParameterError("matrix code " + std::to_string(matrix) + " is not a valid H.273 value");
  if (min_bit_depth < 8 || min_bit_depth > 16)
    throw ParameterError("minimum bit depth must be in [8, 16]");
}

Verdict SignallingReport::overall() const {
  Verdict v = Verdict::kPass;
  for (const ClauseResult& c : clauses) v = std::max(v, c.verdict);
  return v;
}

std::vector<ClauseResult> SignallingReport::violations() const {
  std::vector<ClauseResult> out;
  std::copy_if(clauses.begin(), clauses.end(), std::back_inserter(out),
               [](const ClauseResult& c) { return c.verdict == Verdict::kFail; });
  return out;
}

std::vector<ClauseResult> SignallingReport::warnings() const {
  std::vector<ClauseResult> out;
  std::copy_if(clauses.begin(), clauses.end(), std::back_inserter(out),
               [](const ClauseResult& c) { return c.verdict == Verdict::kWarn; });
  return out;
}

SignallingReport verify_signalling(const HdrSignalling& sig, int bit_depth,
                                   const SignallingPolicy& policy) {
  policy.validate();
  SignallingReport report;
  auto& out = report.clauses;

  if (sig.colour) {
    const ColourDescription& c = *sig.colour;
    out.push_back(code_clause("transfer", "transfer characteristics", c.transfer_characteristics,
                              policy.transfer, transfer_name));
    out.push_back(code_clause("primaries", "colour primaries", c.colour_primaries,
                              policy.primaries, primaries_name));
    out.push_back(code_clause("matrix", "matrix coefficients", c.matrix_coefficients,
                              policy.matrix, matrix_name));
  } else {
    for (const char* clause : {"transfer", "primaries", "matrix"})
      out.push_back({clause, Verdict::kFail, "no colour description present"});
  }

  if (bit_depth < policy.min_bit_depth)
    out.push_back({"bit_depth", Verdict::kFail,
                   "bit depth " + std::to_string(bit_depth) + " below the required " +
                       std::to_string(policy.min_bit_depth)});
  else
    out.push_back({"bit_depth", Verdict::kPass, ""});

  ClauseResult mdcv = presence_clause("mdcv", "mastering display colour volume (mdcv)",
                                      sig.mastering_display.has_value(), policy.mastering_display);
  if (sig.mastering_display && policy.mastering_display != MetadataRequirement::kIgnore) {
    const MasteringDisplay& md = *sig.mastering_display;
    std::string issue;
    if (md.max_luminance <= md.min_luminance)
      issue = "max luminance does not exceed min luminance";
    else if (md.max_luminance > pq::kPeakNits)
      issue = "max luminance above 10000 cd/m2";
    else if (!md.order_matched)
      issue = "primaries match no known set";
    if (!issue.empty()) mdcv = {"mdcv", Verdict::kWarn, issue};
  }
  out.push_back(mdcv);

  ClauseResult clli = presence_clause("clli", "content light level (clli)",
                                      sig.content_light.has_value(), policy.content_light);
  if (sig.content_light && policy.content_light != MetadataRequirement::kIgnore &&
      sig.content_light->max_fall > sig.content_light->max_cll)
    clli = {"clli", Verdict::kWarn, "MaxFALL exceeds MaxCLL"};
  out.push_back(clli);

  return report;
}

}  // namespace hdrcheck
