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

#include <istream>
#include <iterator>

#include <json.hpp>

#include "cli.h"

namespace hdrcheck::cli {

using nlohmann::json;

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

void flatten(const json& obj, std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& out) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      // Entering a subcommand section.
      CLI::ConfigItem enter;
      enter.parents = parents;
      enter.name = "++";
      parents.push_back(key);
      enter.parents = parents;
      out.push_back(enter);
      flatten(value, parents, out);
      CLI::ConfigItem leave;
      leave.parents = parents;
      leave.name = "--";
      out.push_back(leave);
      parents.pop_back();
      continue;
    }
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = key;
    if (value.is_array())
      for (const auto& e : value) item.inputs.push_back(scalar(e));
    else
      item.inputs.push_back(scalar(value));
    out.push_back(item);
  }
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool,
                                  std::string) const {
  json j = json::object();
  for (const CLI::Option* opt : app->get_options({})) {
    if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (opt->count() > 0) {
      const auto& res = opt->results();
      j[name] = res.size() == 1 ? json(res.front()) : json(res);
    } else if (default_also && !opt->get_default_str().empty()) {
      j[name] = opt->get_default_str();
    }
  }
  return j.dump(2);
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  const std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CLI::ConversionError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw CLI::ConversionError("config file must hold a JSON object");
  std::vector<CLI::ConfigItem> out;
  std::vector<std::string> parents;
  flatten(j, parents, out);
  return out;
}

}  // namespace hdrcheck::cli
