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
#include "staircase/polynomial.hpp"

namespace staircase {

// Half-open interval (lo, hi] with exact endpoints. lo == hi denotes the
// single point {hi}, used once a root has been hit exactly.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return (lo < x && x <= hi) || x == hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

// True when the intervals, sorted by lo, satisfy hi_i <= lo_{i+1}; for
// half-open intervals that is exactly pairwise disjointness.
bool pairwise_disjoint(std::vector<RationalInterval> intervals);

// Sturm chain of the squarefree part of a polynomial. Built once, then
// queried many times.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  // Distinct real roots in (a, b]; requires a < b.
  long long count(const Rational& a, const Rational& b) const;
  // Distinct real roots in (a, +inf).
  long long count_above(const Rational& a) const;
  long long count_all() const;

  const IntPolynomial& squarefree() const { return chain_.front(); }

 private:
  long long variations_at(const Rational& x) const;
  long long variations_at_infinity(bool positive) const;

  std::vector<IntPolynomial> chain_;
};

long long sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b);

// 1 + max|c_i| / |lead|, rounded up to an integer.
BigInt cauchy_root_bound(const IntPolynomial& p);

// Disjoint intervals (lo, hi], sorted increasingly, each holding exactly one
// positive root of p; together they cover every positive root.
std::vector<RationalInterval> isolate_positive_roots(const IntPolynomial& p);

struct RefinedRoot {
  double value;
  RationalInterval enclosure;
};

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr int kMaxBisections = 200;

// Bisects an isolating interval until its width drops below tol; the
// midpoint of the final enclosure is returned as a double.
RefinedRoot refine_root(const IntPolynomial& p, const RationalInterval& iv,
                        double tol = kDefaultRootTolerance);

// Same, reusing an existing chain for p.
RefinedRoot refine_root(const SturmChain& chain, const RationalInterval& iv,
                        double tol = kDefaultRootTolerance);

}  // namespace staircase
