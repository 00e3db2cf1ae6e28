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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "staircase/errors.hpp"
#include "staircase/sturm.hpp"

namespace staircase {
namespace {

// (x - 1)(x - 2)(x - 3)
const IntPolynomial kCubic{-6, 11, -6, 1};

TEST(Sturm, HalfOpenCounts) {
  EXPECT_EQ(sturm_count(kCubic, 0, 2), 2);
  EXPECT_EQ(sturm_count(kCubic, 1, 2), 1);  // 1 excluded, 2 included
  EXPECT_EQ(sturm_count(kCubic, 0, 10), 3);
  EXPECT_EQ(sturm_count(kCubic, 3, 10), 0);
  EXPECT_THROW(sturm_count(kCubic, 2, 2), ParameterError);
}

TEST(Sturm, RepeatedRootsCountOnce) {
  const IntPolynomial p = kCubic * IntPolynomial{-1, 1};  // (x - 1)^2 (x - 2)(x - 3)
  EXPECT_EQ(SturmChain(p).count_all(), 3);
  EXPECT_EQ(SturmChain(p).squarefree(), kCubic);
}

TEST(Sturm, CountAboveAndAll) {
  const SturmChain chain(IntPolynomial{-2, 0, 1});  // +-sqrt 2
  EXPECT_EQ(chain.count_all(), 2);
  EXPECT_EQ(chain.count_above(0), 1);
  EXPECT_EQ(chain.count_above(-5), 2);
  EXPECT_EQ(SturmChain(IntPolynomial{1, 0, 1}).count_all(), 0);
}

TEST(Sturm, CauchyBound) {
  EXPECT_EQ(cauchy_root_bound(kCubic), 12);
  EXPECT_EQ(cauchy_root_bound(IntPolynomial{-4, 15, -8, 1}), 16);
}

TEST(Sturm, IsolationOfGoldenCubic) {
  const IntPolynomial p{-4, 15, -8, 1};
  const auto ivs = isolate_positive_roots(p);
  ASSERT_EQ(ivs.size(), 3u);
  EXPECT_TRUE(pairwise_disjoint(ivs));
  for (const auto& iv : ivs) EXPECT_EQ(sturm_count(p, iv.lo, iv.hi), 1);
}

TEST(Sturm, IsolationIgnoresNegativeAndZeroRoots) {
  // x (x + 1)(x - 1)(x - 5)
  const IntPolynomial p = IntPolynomial{0, 1} * IntPolynomial{1, 1} * IntPolynomial{-1, 1} * IntPolynomial{-5, 1};
  const auto ivs = isolate_positive_roots(p);
  ASSERT_EQ(ivs.size(), 2u);
  EXPECT_TRUE(ivs[0].contains(1));
  EXPECT_TRUE(ivs[1].contains(5));
}

TEST(Sturm, RefineMatchesClosedForm) {
  // Roots of x^3 - 8x^2 + 15x - 4 by the trigonometric formula.
  const double theta = std::acos(26.0 * std::sqrt(19.0) / 361.0) / 3.0;
  const double base = 8.0 / 3.0, amp = 2.0 * std::sqrt(19.0) / 3.0;
  const double expected[] = {base + amp * std::cos(theta + 2 * std::numbers::pi / 3),
                             base + amp * std::cos(theta - 2 * std::numbers::pi / 3), base + amp * std::cos(theta)};
  const IntPolynomial p{-4, 15, -8, 1};
  const auto ivs = isolate_positive_roots(p);
  for (std::size_t i = 0; i < 3; ++i) {
    const RefinedRoot root = refine_root(p, ivs[i]);
    EXPECT_NEAR(root.value, expected[i], 1e-11);
    EXPECT_LT(to_double(root.enclosure.width()), 1e-12);
    EXPECT_TRUE(ivs[i].contains(root.enclosure.hi));
  }
}

TEST(Sturm, RefineSqrtTwo) {
  const IntPolynomial p{-2, 0, 1};
  const RefinedRoot root = refine_root(p, {Rational(1), Rational(2)});
  EXPECT_NEAR(root.value, std::sqrt(2.0), 1e-12);
}

TEST(Sturm, RefineExactHitGivesPointInterval) {
  const RefinedRoot root = refine_root(kCubic, {Rational(1, 2), Rational(3, 2)});
  EXPECT_EQ(root.value, 1.0);
  EXPECT_EQ(root.enclosure.lo, root.enclosure.hi);
  EXPECT_EQ(root.enclosure.hi, Rational(1));
}

TEST(Sturm, RefineWithRootAtLeftEndpointStaysInside) {
  // The interval (1, 5/2] holds only the root 2 even though p(1) = 0.
  const RefinedRoot root = refine_root(kCubic, {Rational(1), Rational(5, 2)});
  EXPECT_NEAR(root.value, 2.0, 1e-12);
}

TEST(Sturm, RefineGivesUpAtTheCap) {
  EXPECT_THROW(refine_root(IntPolynomial{-2, 0, 1}, {Rational(1), Rational(2)}, 1e-300), ConvergenceError);
  EXPECT_THROW(refine_root(IntPolynomial{-2, 0, 1}, {Rational(1), Rational(2)}, 0.0), ParameterError);
}

TEST(Sturm, PairwiseDisjointHalfOpenSemantics) {
  EXPECT_TRUE(pairwise_disjoint({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}}));
  EXPECT_FALSE(pairwise_disjoint({{Rational(0), Rational(2)}, {Rational(1), Rational(3)}}));
  EXPECT_TRUE(pairwise_disjoint({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}));
  EXPECT_FALSE(pairwise_disjoint({{Rational(1), Rational(1)}, {Rational(0), Rational(1)}}));
}

}  // namespace
}  // namespace staircase
