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

#pragma once

#include <optional>
#include <string>

namespace staircase::cli {

inline constexpr const char* kConfigEnvVar = "STAIRCASE_SPECTRA_CONFIG";

// Optional settings read from a JSON file. Command-line flags take
// precedence over every field.
struct CliConfig {
  std::optional<std::string> n_range;  // "a..b"
  std::optional<std::string> r_range;
  std::optional<int> jobs;
  std::optional<int> tn_max_dim;
  std::optional<double> root_tolerance;
  std::optional<std::string> output_dir;
};

// Unknown keys or mistyped values raise FormatError.
CliConfig load_config(const std::string& path);

// Reads the file named by STAIRCASE_SPECTRA_CONFIG, or returns an empty
// config when the variable is unset or empty.
CliConfig config_from_environment();

}  // namespace staircase::cli
