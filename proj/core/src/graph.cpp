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

#include "staircase/graph.hpp"

#include <deque>
#include <sstream>

#include <nlohmann/json.hpp>

#include "staircase/errors.hpp"

namespace staircase {

void validate(const StaircaseParams& params) {
  if (params.n < 3) throw ParameterError("n must be >= 3 (got " + std::to_string(params.n) + ")");
  if (params.r < 1) throw ParameterError("r must be >= 1 (got " + std::to_string(params.r) + ")");
}

int vertex_count(const StaircaseParams& params) {
  validate(params);
  return params.r * params.n - 2 * params.r + 2;
}

int edge_count(const StaircaseParams& params) {
  validate(params);
  return params.n + (params.r - 1) * (params.n - 1);
}

Digraph build_staircase(const StaircaseParams& params) {
  validate(params);
  const int n = params.n;
  const int r = params.r;
  Digraph g{params, vertex_count(params), {}};
  g.edges.reserve(static_cast<std::size_t>(edge_count(params)));

  for (int j = 1; j <= n - 1; ++j) g.edges.push_back({j, j + 1, 0});
  g.edges.push_back({n, 1, 0});
  if (r == 1) return g;

  g.edges.push_back({1, n + 1, 1});
  for (int j = n + 1; j <= 2 * n - 3; ++j) g.edges.push_back({j, j + 1, 1});
  g.edges.push_back({2 * n - 2, n, 1});

  for (int i = 1; i <= r - 2; ++i) {
    const int step = i + 1;
    g.edges.push_back({i * n - 2 * i + 2, i * n + n - 2 * i + 1, step});
    for (int j = i * n + n - 2 * i + 1; j <= i * n + 2 * n - 2 * i - 3; ++j)
      g.edges.push_back({j, j + 1, step});
    g.edges.push_back({i * n + 2 * n - 2 * i - 2, i * n + n - 2 * i, step});
  }
  return g;
}

IntMatrix adjacency_matrix(const Digraph& g) {
  IntMatrix a(static_cast<std::size_t>(g.num_vertices), static_cast<std::size_t>(g.num_vertices));
  for (const auto& e : g.edges) a(e.tail - 1, e.head - 1) = 1;
  return a;
}

namespace {

std::vector<bool> reachable_from_first(int num_vertices, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> seen(static_cast<std::size_t>(num_vertices), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.num_vertices <= 0) return false;
  std::vector<std::vector<int>> forward(g.num_vertices), backward(g.num_vertices);
  for (const auto& e : g.edges) {
    forward[e.tail - 1].push_back(e.head - 1);
    backward[e.head - 1].push_back(e.tail - 1);
  }
  const auto out = reachable_from_first(g.num_vertices, forward);
  const auto in = reachable_from_first(g.num_vertices, backward);
  for (int v = 0; v < g.num_vertices; ++v)
    if (!out[v] || !in[v]) return false;
  return true;
}

DigraphFormat parse_digraph_format(std::string_view name) {
  if (name == "dot") return DigraphFormat::kDot;
  if (name == "json") return DigraphFormat::kJson;
  throw ParameterError("unknown digraph format: " + std::string(name));
}

std::string export_digraph(const Digraph& g, DigraphFormat format) {
  if (format == DigraphFormat::kDot) {
    std::ostringstream out;
    out << "digraph staircase_" << g.params.n << '_' << g.params.r << " {\n";
    for (const auto& e : g.edges) out << "  " << e.tail << " -> " << e.head << ";\n";
    out << "}\n";
    return out.str();
  }
  nlohmann::ordered_json j;
  j["n"] = g.params.n;
  j["r"] = g.params.r;
  j["num_vertices"] = g.num_vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) j["edges"].push_back({e.tail, e.head});
  return j.dump() + "\n";
}

Digraph parse_digraph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("digraph JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("r") || !j.contains("num_vertices") ||
      !j.contains("edges") || !j["edges"].is_array())
    throw FormatError("digraph JSON: expected fields n, r, num_vertices, edges");
  Digraph g;
  g.params = {j["n"].get<int>(), j["r"].get<int>()};
  validate(g.params);
  g.num_vertices = j["num_vertices"].get<int>();
  const auto& edges = j["edges"];
  if (static_cast<int>(edges.size()) != edge_count(g.params) || g.num_vertices != vertex_count(g.params))
    throw FormatError("digraph JSON: vertex/edge counts do not match (n, r)");
  const int n = g.params.n;
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const auto& e = edges[idx];
    if (!e.is_array() || e.size() != 2) throw FormatError("digraph JSON: edge must be [tail, head]");
    const int tail = e[0].get<int>();
    const int head = e[1].get<int>();
    if (tail < 1 || head < 1 || tail > g.num_vertices || head > g.num_vertices)
      throw FormatError("digraph JSON: vertex id out of range");
    const int i = static_cast<int>(idx);
    const int step = i < n ? 0 : 1 + (i - n) / (n - 1);
    g.edges.push_back({tail, head, step});
  }
  return g;
}

}  // namespace staircase
