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
#include <map>
#include <ostream>
#include <set>

#include "common.h"
#include "hdrcheck/error.h"
#include "hdrcheck/media_io.h"

namespace hdrcheck::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::string check_area(const std::string& check) {
  static const std::map<std::string, std::string> kAreas{
      {"inspect", "Signalling"},
      {"verify.bitdepth", "Bit depth and banding"},
      {"verify.banding", "Bit depth and banding"},
      {"verify.fidelity", "Conversion fidelity"},
      {"verify.stats", "Signal statistics"},
      {"verify.gamut", "Colour gamut"},
      {"analyze.sustained", "Peak luminance and ABL"},
      {"analyze.sweep", "Peak luminance and ABL"},
      {"analyze.eotf", "EOTF tracking"},
      {"analyze.dimming", "Local dimming"},
      {"analyze.cooloff", "Session cool-off"},
  };
  // Qualified checks such as "verify.gamut.bt709" fall back to their parent.
  for (std::string key = check;;) {
    if (auto it = kAreas.find(key); it != kAreas.end()) return it->second;
    const auto dot = key.rfind('.');
    if (dot == std::string::npos) return "Other";
    key.resize(dot);
  }
}

namespace {

struct Entry {
  fs::path path;
  Report report;
};

bool is_report_file(const fs::path& p) {
  const std::string name = p.filename().string();
  return name.size() > 12 && name.ends_with(".report.json");
}

std::vector<fs::path> expand(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::recursive_directory_iterator(p))
        if (e.is_regular_file() && is_report_file(e.path())) found.push_back(e.path());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      if (!fs::exists(p)) throw ParameterError("no such report: " + in);
      out.push_back(p);
    }
  }
  return out;
}

Status worst(Status a, Status b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

std::string upper(Status s) {
  std::string t = to_string(s);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  return t;
}

std::string markdown(const std::vector<Entry>& entries, Status overall) {
  std::string md = "# Conformance report\n\nOverall: **" + upper(overall) + "**\n";
  std::map<std::string, std::vector<const Entry*>> by_area;
  for (const auto& e : entries) by_area[check_area(e.report.check)].push_back(&e);
  for (const auto& [area, list] : by_area) {
    Status s = Status::kPass;
    for (const Entry* e : list) s = worst(s, e->report.status);
    md += "\n## " + area + ": " + upper(s) + "\n\n| check | status | summary | report |\n"
          "|---|---|---|---|\n";
    for (const Entry* e : list) {
      std::string summary = e->report.summary;
      std::replace(summary.begin(), summary.end(), '|', '/');
      md += "| " + e->report.check + " | " + to_string(e->report.status) + " | " + summary +
            " | " + e->path.filename().string() + " |\n";
    }
    for (const Entry* e : list)
      if (e->report.status != Status::kPass)
        for (const auto& f : e->report.findings) md += "\n- " + e->report.check + ": " + f;
    if (md.back() != '\n') md += "\n";
  }
  return md;
}

}  // namespace

void add_report_command(CLI::App& app, Context& ctx) {
  CLI::App* sub = app.add_subcommand("report", "Merge check reports into one conformance report");
  auto inputs = std::make_shared<std::vector<std::string>>();
  auto name = std::make_shared<std::string>("conformance");
  sub->add_option("inputs", *inputs, "Report files or directories")->required();
  sub->add_option("--name", *name, "Output base name")->capture_default_str();
  sub->callback([&ctx, inputs, name] {
    ctx.action = [&ctx, inputs, name] {
      std::vector<Entry> entries;
      for (const auto& p : expand(*inputs)) entries.push_back({p, report_from_json(read_json_file(p))});
      if (entries.empty()) throw ParameterError("report bundle is empty");
      std::set<int> versions;
      for (const auto& e : entries) versions.insert(e.report.schema_version);
      if (versions.size() > 1)
        throw ValidationError("schema_version", "conflicting report schema versions in bundle");
      if (*versions.begin() != kReportSchemaVersion)
        throw ValidationError("schema_version",
                              "unsupported report schema version " +
                                  std::to_string(*versions.begin()));

      Status overall = Status::kPass;
      json checks = json::array();
      json areas = json::object();
      std::vector<std::string> failing;
      for (const auto& e : entries) {
        overall = worst(overall, e.report.status);
        const std::string area = check_area(e.report.check);
        const Status prev =
            areas.contains(area) ? status_from_name(areas[area].get<std::string>()) : Status::kPass;
        areas[area] = to_string(worst(prev, e.report.status));
        checks.push_back({{"check", e.report.check},
                          {"area", area},
                          {"status", to_string(e.report.status)},
                          {"summary", e.report.summary},
                          {"findings", e.report.findings},
                          {"report", e.path.generic_string()}});
        if (e.report.status == Status::kFail) failing.push_back(e.report.check);
      }
      const json doc{{"schema", "hdrcheck.conformance"},
                     {"schema_version", kReportSchemaVersion},
                     {"overall", to_string(overall)},
                     {"areas", areas},
                     {"failing", failing},
                     {"checks", checks}};
      const fs::path json_path = ctx.output_path(*name + ".json");
      const fs::path md_path = ctx.output_path(*name + ".md");
      write_file_atomic(json_path, doc.dump(2) + "\n");
      write_file_atomic(md_path, markdown(entries, overall));
      *ctx.out << "overall: " << upper(overall) << " (" << entries.size() << " checks)\n";
      for (const auto& f : failing) *ctx.out << "  failing: " << f << "\n";
      *ctx.out << "report: " << json_path.string() << "\n";
      return exit_code(overall);
    };
  });
}

}  // namespace hdrcheck::cli
