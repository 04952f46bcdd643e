// Copyright 2026 The hwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <istream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace hwsim::cli {

/// JSON reader for CLI11's --config. Scalar and array members apply to the
/// subcommand being run; an object member named after a subcommand applies
/// to that subcommand only. Options given on the command line win.
///
///   {"seed": 7, "variance": {"samples": 20000, "gate": ["rbs", "fbs"]}}
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* root) : root_(root) {}

  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    nlohmann::json out = nlohmann::json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (!opt->get_configurable() || opt->get_lnames().empty()) continue;
      const auto& results = opt->results();
      if (!results.empty()) {
        out[opt->get_lnames().front()] = results.size() == 1 ? nlohmann::json(results.front()) : nlohmann::json(results);
      } else if (default_also && !opt->get_default_str().empty()) {
        out[opt->get_lnames().front()] = opt->get_default_str();
      }
    }
    return out.dump(2) + "\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    const std::string text{std::istreambuf_iterator<char>(input), std::istreambuf_iterator<char>()};
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw CLI::ConversionError("config: invalid JSON at byte " + std::to_string(e.byte));
    }
    if (!doc.is_object()) throw CLI::ConversionError("config: top level must be an object");

    std::vector<std::string> active;
    for (const CLI::App* sub : root_->get_subcommands()) active.push_back(sub->get_name());

    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      if (value.is_object()) {
        for (const auto& [inner, v] : value.items()) items.push_back(item({key}, inner, v));
      } else if (key != "config") {
        items.push_back(item(active, key, value));
      }
    }
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static CLI::ConfigItem item(std::vector<std::string> parents, const std::string& name, const nlohmann::json& v) {
    CLI::ConfigItem out;
    out.parents = std::move(parents);
    out.name = name;
    if (v.is_array()) {
      for (const auto& e : v) out.inputs.push_back(scalar(e));
    } else {
      out.inputs.push_back(scalar(v));
    }
    return out;
  }

  const CLI::App* root_;
};

}  // namespace hwsim::cli
