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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/core_matrix.hpp"
#include "staircase/sturm.hpp"

namespace staircase::cli {

struct GridRange {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const GridRange&, const GridRange&) = default;
};

// "a..b" or a single integer "a". ParameterError on malformed text or a > b.
GridRange parse_range(std::string_view text);

struct VerifyOptions {
  GridRange n{3, 6};
  GridRange r{1, 20};
  int jobs = 1;
  int tn_max_dim = kDefaultTnMaxDim;
  double root_tolerance = kDefaultRootTolerance;
};

struct CheckOutcome {
  int n = 0;  // 0 for checks that do not depend on a grid cell
  int r = 0;
  std::string check;
  bool passed = false;
  std::string detail;
};

struct VerifyResult {
  // Outcomes ordered by (n, r) and then by check order; grid-independent
  // checks come last.
  std::vector<CheckOutcome> outcomes;
  std::set<std::string> operations_exercised;  // "module.operation"
  double wall_seconds = 0.0;

  bool all_passed() const;
  std::optional<CheckOutcome> first_failure() const;
};

// Every public operation, keyed by module. verify must exercise them all.
const std::map<std::string, std::vector<std::string>>& public_operations();

// The per-cell checks, in execution order.
const std::vector<std::string>& cell_check_names();
// The grid-independent checks, in execution order.
const std::vector<std::string>& global_check_names();

// Runs the invariant suite over the grid. Cells are distributed over
// `jobs` worker threads; outcomes are merged by (n, r) key, so the result
// does not depend on scheduling.
VerifyResult run_verify(const VerifyOptions& options);

// Pass/fail table: one row per check with passed/total counts.
std::string format_verify_table(const VerifyResult& result);

}  // namespace staircase::cli
