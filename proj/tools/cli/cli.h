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

#ifndef HDRCHECK_TOOLS_CLI_CLI_H
#define HDRCHECK_TOOLS_CLI_CLI_H

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace hdrcheck::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNonConformant = 2;

// State shared by every subcommand of one invocation.
struct Context {
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  // Set by the selected subcommand's callback; run after parsing.
  std::function<int()> action;

  // Relative paths land in out_dir; the directory is created on demand.
  std::filesystem::path output_path(const std::filesystem::path& p) const;
};

void add_pattern_command(CLI::App& app, Context& ctx);
void add_inspect_command(CLI::App& app, Context& ctx);
void add_verify_command(CLI::App& app, Context& ctx);
void add_analyze_command(CLI::App& app, Context& ctx);
void add_sim_command(CLI::App& app, Context& ctx);
void add_report_command(CLI::App& app, Context& ctx);
void add_convert_command(CLI::App& app, Context& ctx);

// Parses and runs one invocation; never throws. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reads a JSON config file mirroring the command-line flags, e.g.
//   {"seed": 42, "pattern": {"night-sky": {"percent": 1}}}
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;
};

}  // namespace hdrcheck::cli

#endif  // HDRCHECK_TOOLS_CLI_CLI_H
