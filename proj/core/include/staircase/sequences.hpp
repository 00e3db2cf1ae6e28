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

#include <set>
#include <vector>

#include "staircase/bigint.hpp"
#include "staircase/polynomial.hpp"
#include "staircase/sturm.hpp"

namespace staircase {

// Padovan spiral numbers on all of Z: P_0 = P_1 = P_2 = 1,
// P_{m+3} = P_{m+1} + P_m, run backwards as P_m = P_{m+3} - P_{m+1}.
// Values are memoized in a process-wide table guarded for concurrent use.
BigInt padovan(long long m);

// Indices with P_m = 0: {-1, -3, -4, -8, -17}. Treated as a known constant.
const std::set<long long>& padovan_zero_indices();

// Exhaustive scan of [lo, hi] for vanishing Padovan numbers.
std::set<long long> padovan_zeros_in_window(long long lo, long long hi);

// True iff the zeros found in [lo, hi] are exactly the known zero indices
// that fall in that window.
bool verify_padovan_zero_window(long long lo, long long hi);

// Phi_{n,r}(1), checked against (-1)^r P_{-r-7}.
BigInt phi_at_one(int n, int r);

// Rational nonzero eigenvalues of A_{n,r}: a subset of {1, -1}. Nonempty
// exactly for r in {1, 10}; -1 joins 1 only when n is even. Every member is
// confirmed by Phi_{n,r}(lambda) == 0 and every excluded candidate by
// Phi_{n,r}(lambda) != 0.
std::set<int> classify_rational_eigenvalues(int n, int r);

// Integer candidates satisfy |lambda| < (27/4)^(1/3) < 2, i.e. 27/4 < 8.
bool rational_candidate_bound_holds();

struct NarayanaPoly {
  int index = 0;
  IntPolynomial poly;  // in k
};

// N_0 = 0, N_1 = 1, N_2 = k, N_m = k N_{m-1} + N_{m-3}; the binomial form
// sum_j C(m-1-2j, j) k^(m-1-3j) is computed as well and must agree.
NarayanaPoly narayana_poly(int m);
IntPolynomial narayana_binomial(int m);

// N_m(k) == (-1)^(m+1) Phi_{3,m-3}(-k) as polynomials, m >= 4.
bool verify_narayana_dictionary(int m);

struct NarayanaRootPackage {
  long long ord_k = 0;
  std::set<int> rational_nonzero_roots;
};

// ord_k N_m is 0, 1, 2 for m = 1, 2, 0 mod 3; the only rational nonzero root
// ever is -1, exactly for m in {4, 13}. Violations raise ConsistencyError.
NarayanaRootPackage narayana_root_package(int m);

struct NarayanaRealRoots {
  std::vector<RationalInterval> positive;
  // Isolating intervals for -k over the negative roots k (mirrored).
  std::vector<RationalInterval> negative_mirrored;
  // gcd(q, q') is constant for q = N_m / k^ord: every nonzero root is simple.
  bool nonzero_roots_simple = true;
};

NarayanaRealRoots narayana_nonzero_real_roots(int m);

}  // namespace staircase
