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
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/int_matrix.hpp"
#include "staircase/layers.hpp"

namespace staircase {

// B^(c) B^(c+1) ... B^(c-1), indices mod n, starting at c = start_layer: the
// n-step return map on one layer.
IntMatrix cyclic_core(const BlockCyclicForm& bf, int start_layer = 0);

struct MinorWitness {
  std::vector<int> rows;  // 0-based, increasing
  std::vector<int> cols;
  BigInt value;

  friend bool operator==(const MinorWitness&, const MinorWitness&) = default;
};

struct TNReport {
  int checked_up_to_order = 0;
  long long minors_checked = 0;
  bool all_nonnegative = true;
  // Present iff all_nonnegative is false: the first negative minor in
  // enumeration order (order, then lexicographic rows, then columns).
  std::optional<MinorWitness> witness;
};

inline constexpr int kDefaultTnMaxDim = 10;

// Enumerates square minors exactly, order by order (sum_k C(rows,k)^2 of
// them when all are nonnegative; enumeration stops after the first order
// that contains a negative minor). The work is split across `jobs` threads
// by row subset; the merge is deterministic. Throws DimensionCapError when m.rows() > max_dim.
TNReport check_total_nonnegativity(const IntMatrix& m, int max_dim = kDefaultTnMaxDim, int jobs = 1);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

// Strong connectivity of the digraph with an edge u -> v iff m(u, v) > 0.
bool is_irreducible(const IntMatrix& m);

// Algebraic multiplicity of the eigenvalue 0.
long long core_zero_multiplicity(const IntMatrix& k);

}  // namespace staircase
