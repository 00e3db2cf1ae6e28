// Copyright 2026 The Staircase Spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "staircase/errors.hpp"

namespace staircase::cli {

CliConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw FormatError("config " + path + ": top level must be an object");

  CliConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "n_range") cfg.n_range = value.get<std::string>();
      else if (key == "r_range") cfg.r_range = value.get<std::string>();
      else if (key == "jobs") cfg.jobs = value.get<int>();
      else if (key == "tn_max_dim") cfg.tn_max_dim = value.get<int>();
      else if (key == "root_tolerance") cfg.root_tolerance = value.get<double>();
      else if (key == "output_dir") cfg.output_dir = value.get<std::string>();
      else throw FormatError("config " + path + ": unknown key \"" + key + "\"");
    }
  } catch (const nlohmann::json::type_error& e) {
    throw FormatError("config " + path + ": " + e.what());
  }
  return cfg;
}

CliConfig config_from_environment() {
  const char* path = std::getenv(kConfigEnvVar);
  if (path == nullptr || *path == '\0') return {};
  return load_config(path);
}

}  // namespace staircase::cli
