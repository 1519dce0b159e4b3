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

#include <array>
#include <fstream>
#include <ostream>

#include "common.h"
#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"
#include "hdrcheck/verify.h"

namespace hdrcheck::cli {

namespace {

struct InspectOptions {
  std::string input;
  std::string report;
  SignallingPolicy policy;
  std::string mdcv = "warn";
  std::string clli = "warn";
  std::optional<int> bit_depth;
};

enum class MediaKind { kY4m, kSidecar, kIsobmff };

MediaKind sniff(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::array<char, 10> head{};
  in.read(head.data(), head.size());
  const std::string s(head.data(), static_cast<std::size_t>(in.gcount()));
  if (s.rfind("YUV4MPEG2", 0) == 0) return MediaKind::kY4m;
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && s[first] == '{') return MediaKind::kSidecar;
  return MediaKind::kIsobmff;
}

nlohmann::json clauses_json(const SignallingReport& r) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : r.clauses)
    a.push_back({{"clause", c.clause}, {"verdict", to_string(c.verdict)}, {"reason", c.reason}});
  return a;
}

int inspect(const Context& ctx, const InspectOptions& o) {
  SignallingPolicy policy = o.policy;
  policy.mastering_display = *metadata_requirement_from_name(o.mdcv);
  policy.content_light = *metadata_requirement_from_name(o.clli);

  const std::filesystem::path path = o.input;
  Report report;
  report.check = "inspect";
  report.inputs.push_back(path.generic_string());
  HdrSignalling sig;
  std::optional<int> bit_depth = o.bit_depth;

  switch (sniff(path)) {
    case MediaKind::kY4m: {
      const Y4mStream stream = read_y4m(path);
      if (!bit_depth) bit_depth = stream.header.bit_depth();
      report.result["container"] = "y4m";
      report.result["frames"] = stream.frames.size();
      report.result["geometry"] = {{"width", stream.header.width},
                                   {"height", stream.header.height}};
      const auto sidecar = sidecar_path_for(path);
      if (std::filesystem::exists(sidecar)) {
        const SidecarManifest m = read_manifest(sidecar);
        verify_digests(m, sidecar.parent_path());
        sig = m.signalling;
        report.result["sidecar"] = sidecar.filename().string();
      } else {
        report.findings.push_back("no sidecar manifest; Y4M carries no HDR signalling");
      }
      break;
    }
    case MediaKind::kSidecar: {
      const SidecarManifest m = read_manifest(path);
      verify_digests(m, path.parent_path());
      sig = m.signalling;
      if (!bit_depth && m.pattern) bit_depth = m.pattern->format.bit_depth;
      report.result["container"] = "sidecar";
      break;
    }
    case MediaKind::kIsobmff: {
      const IsobmffScan scan = scan_isobmff(path);
      sig = scan.signalling;
      if (!bit_depth) bit_depth = scan.bit_depth;
      report.result["container"] = "isobmff";
      nlohmann::json boxes = nlohmann::json::array();
      for (const auto& b : scan.boxes)
        boxes.push_back({{"path", b.path}, {"offset", b.offset}, {"size", b.size}});
      report.result["boxes"] = boxes;
      report.result["icc_profile"] = scan.icc_profile;
      for (const auto& w : scan.warnings) report.findings.push_back(w);
      break;
    }
  }

  if (!bit_depth) {
    report.findings.push_back("bit depth not signalled; bit-depth clause not checked");
    bit_depth = policy.min_bit_depth;
  }
  const SignallingReport sr = verify_signalling(sig, *bit_depth, policy);
  report.result["bit_depth"] = *bit_depth;
  report.result["signalling"] = to_json(sig);
  report.result["clauses"] = clauses_json(sr);
  for (const auto& c : sr.clauses)
    if (c.verdict != Verdict::kPass) report.findings.push_back(c.clause + ": " + c.reason);

  switch (sr.overall()) {
    case Verdict::kPass: report.status = Status::kPass; break;
    case Verdict::kWarn: report.status = Status::kWarn; break;
    case Verdict::kFail: report.status = Status::kFail; break;
  }
  const auto failures = sr.violations().size();
  report.summary = failures ? std::to_string(failures) + " signalling violation(s)"
                            : "signalling conforms to the HDR10 policy";
  return finish_report(ctx, report, o.report, path);
}

}  // namespace

void add_inspect_command(CLI::App& app, Context& ctx) {
  auto* sub = app.add_subcommand("inspect", "Validate HDR signalling of a media file");
  auto o = std::make_shared<InspectOptions>();
  sub->add_option("input", o->input, "MP4/MOV/HEIF file, Y4M with sidecar, or sidecar JSON")
      ->required();
  sub->add_option("--report", o->report, "Report path");
  sub->add_option("--transfer", o->policy.transfer, "Required transfer code")
      ->capture_default_str();
  sub->add_option("--primaries", o->policy.primaries, "Required primaries code")
      ->capture_default_str();
  sub->add_option("--matrix", o->policy.matrix, "Required matrix code")->capture_default_str();
  sub->add_option("--min-bit-depth", o->policy.min_bit_depth)->capture_default_str();
  sub->add_option("--bit-depth", o->bit_depth, "Bit depth when the container does not say");
  sub->add_option("--mdcv", o->mdcv, "ignore, warn or require")
      ->capture_default_str()
      ->check(CLI::IsMember({"ignore", "warn", "require"}));
  sub->add_option("--clli", o->clli, "ignore, warn or require")
      ->capture_default_str()
      ->check(CLI::IsMember({"ignore", "warn", "require"}));
  sub->callback([&ctx, o] { ctx.action = [&ctx, o] { return inspect(ctx, *o); }; });
}

}  // namespace hdrcheck::cli
