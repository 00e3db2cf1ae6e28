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

#include "staircase/core_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <thread>
#include <tuple>

#include "staircase/charpoly.hpp"
#include "staircase/errors.hpp"
#include "staircase/polynomial.hpp"

namespace staircase {

IntMatrix cyclic_core(const BlockCyclicForm& bf, int start_layer) {
  const int n = bf.period();
  if (start_layer < 0 || start_layer >= n)
    throw ParameterError("cyclic_core: start layer out of range");
  IntMatrix product = bf.blocks[start_layer];
  for (int step = 1; step < n; ++step) product = product * bf.blocks[(start_layer + step) % n];
  return product;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw ParameterError("determinant: matrix must be square");
  const std::size_t k = m.rows();
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a(swap_row, p) == 0) ++swap_row;
      if (swap_row == k) return 0;
      for (std::size_t j = 0; j < k; ++j) std::swap(a(p, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
      }
      a(i, p) = 0;
    }
    prev = a(p, p);
  }
  return sign * a(k - 1, k - 1);
}

namespace {

__extension__ using i128 = __int128;

constexpr int kMaxMinorOrder = 16;

// Bareiss on a k x k int64 buffer. Returns false when an intermediate value
// leaves the int64 range; the caller then redoes the minor in BigInt.
bool bareiss_i64(std::int64_t* a, int k, std::int64_t& det) {
  std::int64_t prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (a[p * k + p] == 0) {
      int swap_row = p + 1;
      while (swap_row < k && a[swap_row * k + p] == 0) ++swap_row;
      if (swap_row == k) {
        det = 0;
        return true;
      }
      for (int j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap_row * k + j]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        const i128 num = static_cast<i128>(a[i * k + j]) * a[p * k + p] - static_cast<i128>(a[i * k + p]) * a[p * k + j];
        const i128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN) return false;
        a[i * k + j] = static_cast<std::int64_t>(q);
      }
    }
    prev = a[p * k + p];
  }
  det = sign * a[(k - 1) * k + (k - 1)];
  return true;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

struct NegativeHit {
  int order;
  std::size_t row_index;
  std::size_t col_index;
  BigInt value;
};

}  // namespace

TNReport check_total_nonnegativity(const IntMatrix& m, int max_dim, int jobs) {
  if (!m.is_square()) throw ParameterError("check_total_nonnegativity: matrix must be square");
  if (static_cast<int>(m.rows()) > max_dim)
    throw DimensionCapError("check_total_nonnegativity: dimension " + std::to_string(m.rows()) +
                            " exceeds cap " + std::to_string(max_dim));
  const int dim = static_cast<int>(m.rows());
  if (dim > kMaxMinorOrder) throw DimensionCapError("check_total_nonnegativity: dimension above 16");

  // int64 copy when every entry fits; otherwise every minor goes through BigInt.
  bool small_entries = true;
  std::vector<std::int64_t> small(m.entries().size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    const BigInt& v = m.entries()[i];
    if (v > INT64_MAX || v < INT64_MIN) {
      small_entries = false;
      break;
    }
    small[i] = v.convert_to<std::int64_t>();
  }

  TNReport report;
  report.checked_up_to_order = dim;
  jobs = std::max(1, jobs);
  std::optional<NegativeHit> best;

  for (int k = 1; k <= dim && !best; ++k) {
    const auto subsets = subsets_of_size(dim, k);
    const std::size_t count = subsets.size();
    std::vector<std::optional<NegativeHit>> found(static_cast<std::size_t>(jobs));

    auto worker = [&](int job) {
      std::vector<std::int64_t> buf(static_cast<std::size_t>(k * k));
      for (std::size_t ri = static_cast<std::size_t>(job); ri < count; ri += static_cast<std::size_t>(jobs)) {
        const auto& rows = subsets[ri];
        for (std::size_t ci = 0; ci < count; ++ci) {
          const auto& cols = subsets[ci];
          BigInt value;
          bool done = false;
          if (small_entries) {
            for (int i = 0; i < k; ++i)
              for (int j = 0; j < k; ++j) buf[i * k + j] = small[rows[i] * dim + cols[j]];
            std::int64_t det = 0;
            if (bareiss_i64(buf.data(), k, det)) {
              value = det;
              done = true;
            }
          }
          if (!done) {
            IntMatrix sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
              for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
            value = determinant(sub);
          }
          if (value.sign() < 0) {
            auto& slot = found[static_cast<std::size_t>(job)];
            if (!slot || std::tie(ri, ci) < std::tie(slot->row_index, slot->col_index))
              slot = NegativeHit{k, ri, ci, value};
          }
        }
      }
    };

    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (int job = 0; job < jobs; ++job) threads.emplace_back(worker, job);
      for (auto& t : threads) t.join();
    }
    report.minors_checked += static_cast<long long>(count * count);
    for (auto& hit : found) {
      if (!hit) continue;
      if (!best || std::tie(hit->row_index, hit->col_index) < std::tie(best->row_index, best->col_index))
        best = hit;
    }
    if (best) {
      report.all_nonnegative = false;
      report.witness = MinorWitness{subsets[best->row_index], subsets[best->col_index], best->value};
      report.checked_up_to_order = k;
    }
  }
  return report;
}

bool is_irreducible(const IntMatrix& m) {
  if (!m.is_square()) throw ParameterError("is_irreducible: matrix must be square");
  const std::size_t n = m.rows();
  auto reach = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        const BigInt& entry = forward ? m(u, v) : m(v, u);
        if (entry.sign() > 0 && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach(true) && reach(false);
}

long long core_zero_multiplicity(const IntMatrix& k) { return ord_at_zero(charpoly_exact(k)); }

}  // namespace staircase
