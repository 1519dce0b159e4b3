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

#include <iostream>

#include "cli.h"
#include "hdrcheck/error.h"

namespace hdrcheck::cli {

std::filesystem::path Context::output_path(const std::filesystem::path& p) const {
  const std::filesystem::path full = p.is_absolute() ? p : std::filesystem::path(out_dir) / p;
  if (full.has_parent_path()) std::filesystem::create_directories(full.parent_path());
  return full;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app{"HDR subjective-test conformance toolkit", "hdrcheck"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file mirroring the command-line flags");
  app.add_option("--out-dir", ctx.out_dir, "Directory for output files")
      ->envname("HDRCHECK_OUT_DIR")
      ->capture_default_str();
  app.add_option("--seed", ctx.seed, "Root seed; every random stream derives from it")
      ->capture_default_str();
  app.require_subcommand(1);

  add_pattern_command(app, ctx);
  add_inspect_command(app, ctx);
  add_verify_command(app, ctx);
  add_analyze_command(app, ctx);
  add_sim_command(app, ctx);
  add_report_command(app, ctx);
  add_convert_command(app, ctx);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hdrcheck: " << e.what() << "\n";
    return kExitError;
  }

  if (!ctx.action) {
    err << "hdrcheck: no command selected\n";
    return kExitError;
  }
  try {
    return ctx.action();
  } catch (const ParseError& e) {
    err << "hdrcheck: parse error: " << e.what() << "\n";
  } catch (const LogError& e) {
    err << "hdrcheck: log error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "hdrcheck: invalid document: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "hdrcheck: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hdrcheck: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "hdrcheck: unexpected error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace hdrcheck::cli
