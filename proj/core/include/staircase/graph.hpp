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

#include <string>
#include <string_view>
#include <vector>

#include "staircase/int_matrix.hpp"

namespace staircase {

struct StaircaseParams {
  int n = 3;  // polygon size, n >= 3
  int r = 1;  // number of glued n-cycles, r >= 1

  friend bool operator==(const StaircaseParams&, const StaircaseParams&) = default;
};

// Throws ParameterError unless n >= 3 and r >= 1.
void validate(const StaircaseParams& params);

// |V| = r n - 2r + 2.
int vertex_count(const StaircaseParams& params);
// |E| = n + (r - 1)(n - 1).
int edge_count(const StaircaseParams& params);

struct Edge {
  int tail;  // 1-based vertex id
  int head;
  int step;  // 0: the initial n-cycle; k >= 1: k-th gluing step

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Alternating-oriented n-gonal staircase digraph. Edges are kept in
// construction order; the layer partition depends on that order.
struct Digraph {
  StaircaseParams params;
  int num_vertices = 0;
  std::vector<Edge> edges;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

// Glue r directed n-cycles. Gluing step k >= 1 adds, in order, the entrance
// edge, the n - 3 path edges (none when n = 3) and the exit edge.
Digraph build_staircase(const StaircaseParams& params);

// 0/1 matrix with A(u-1, v-1) = 1 iff (u, v) is an edge.
IntMatrix adjacency_matrix(const Digraph& g);

// Forward and backward reachability from vertex 1.
bool is_strongly_connected(const Digraph& g);

enum class DigraphFormat { kDot, kJson };

// "dot" or "json"; anything else is a ParameterError.
DigraphFormat parse_digraph_format(std::string_view name);

std::string export_digraph(const Digraph& g, DigraphFormat format);

// Inverse of the JSON export. Edge steps are recovered from the fixed
// per-step edge counts (n edges for step 0, n - 1 for each later step).
Digraph parse_digraph_json(std::string_view text);

}  // namespace staircase
