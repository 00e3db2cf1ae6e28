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

// Slow, obviously-correct reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/graph.hpp"
#include "staircase/int_matrix.hpp"
#include "staircase/polynomial.hpp"

namespace staircase::testing {

// Leibniz expansion over all permutations of the selected rows and columns.
inline BigInt leibniz_det(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < k && term != 0; ++i) term *= m(rows[i], cols[perm[i]]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline BigInt leibniz_det(const IntMatrix& m) {
  std::vector<int> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return leibniz_det(m, idx, idx);
}

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    fn(s);
    int i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++s[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// det(xI - M): the coefficient of x^(d-k) is (-1)^k times the sum of the
// principal k x k minors.
inline IntPolynomial charpoly_by_principal_minors(const IntMatrix& m) {
  const int d = static_cast<int>(m.rows());
  std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
  coeffs[static_cast<std::size_t>(d)] = 1;
  for (int k = 1; k <= d; ++k) {
    BigInt sum = 0;
    for_each_subset(d, k, [&](const std::vector<int>& s) { sum += leibniz_det(m, s, s); });
    coeffs[static_cast<std::size_t>(d - k)] = k % 2 == 0 ? sum : BigInt(-sum);
  }
  return IntPolynomial(std::move(coeffs));
}

struct BruteTn {
  bool all_nonnegative = true;
  long long minors = 0;
  std::vector<int> rows, cols;  // first negative minor, if any
  BigInt value;
};

// Order by order, rows then columns lexicographic; stops after the first
// order that contains a negative minor.
inline BruteTn brute_total_nonnegativity(const IntMatrix& m) {
  BruteTn out;
  const int d = static_cast<int>(m.rows());
  for (int k = 1; k <= d && out.all_nonnegative; ++k) {
    for_each_subset(d, k, [&](const std::vector<int>& rows) {
      for_each_subset(d, k, [&](const std::vector<int>& cols) {
        ++out.minors;
        const BigInt v = leibniz_det(m, rows, cols);
        if (v < 0 && out.all_nonnegative) {
          out.all_nonnegative = false;
          out.rows = rows;
          out.cols = cols;
          out.value = v;
        }
      });
    });
  }
  return out;
}

// Shortest path lengths from vertex 1 (index 0); -1 when unreachable.
inline std::vector<int> bfs_distances(int vertices, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices) + 1);
  for (const auto& e : edges) adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
  std::vector<int> dist(static_cast<std::size_t>(vertices) + 1, -1);
  std::queue<int> q;
  dist[1] = 0;
  q.push(1);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
  }
  return {dist.begin() + 1, dist.end()};
}

// Transitive closure by Warshall; strongly connected iff every entry is set.
inline bool warshall_strongly_connected(std::vector<std::vector<bool>> reach) {
  const std::size_t n = reach.size();
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (const auto& row : reach)
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  return true;
}

inline bool warshall_strongly_connected(const IntMatrix& m) {
  std::vector<std::vector<bool>> reach(m.rows(), std::vector<bool>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reach[i][j] = m(i, j) > 0;
  return warshall_strongly_connected(std::move(reach));
}

// Hand-rolled generators with a fixed seed so failures reproduce.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long int_in(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  bool coin() { return int_in(0, 1) == 1; }

  IntPolynomial poly(int max_degree, long long bound) {
    const int deg = static_cast<int>(int_in(0, max_degree));
    std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = int_in(-bound, bound);
    if (c.back() == 0) c.back() = 1;
    return IntPolynomial(std::move(c));
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long long lo, long long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = int_in(lo, hi);
    return m;
  }

  StaircaseParams params(int n_max, int r_max) {
    return {static_cast<int>(int_in(3, n_max)), static_cast<int>(int_in(1, r_max))};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace staircase::testing
