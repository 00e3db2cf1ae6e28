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

#include "oracles.hpp"
#include "staircase/charpoly.hpp"
#include "staircase/core_matrix.hpp"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"

namespace staircase {
namespace {

IntMatrix core_of(int n, int r) {
  const Digraph g = build_staircase({n, r});
  return cyclic_core(block_cyclic_form(g, layer_partition(g)), 0);
}

TEST(Family, GoldenPhi38) {
  // x^10 - 8x^7 + 15x^4 - 4x = x * char_K(x^3)
  const IntPolynomial expected{0, -4, 0, 0, 15, 0, 0, -8, 0, 0, 1};
  EXPECT_EQ(phi_via_recursion(3, 8), expected);
  EXPECT_EQ(phi_via_binomial(3, 8), expected);
  EXPECT_EQ(phi_via_determinant(3, 8), expected);
}

TEST(Family, SingleCycle) {
  for (int n = 3; n <= 8; ++n) {
    const IntPolynomial expected = IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial{1};
    EXPECT_EQ(phi_via_recursion(n, 1), expected);
    EXPECT_EQ(phi_via_binomial(n, 1), expected);
  }
}

TEST(Family, RoutesAgreeOnSmallGrid) {
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; r <= 10; ++r) {
      const IntPolynomial rec = phi_via_recursion(n, r);
      EXPECT_EQ(phi_via_binomial(n, r), rec);
      EXPECT_EQ(phi_via_determinant(n, r, CharpolyMethod::kModularHessenberg), rec);
    }
}

TEST(Family, DeterminantRouteAgreesWithMinorOracleOnTinyGraphs) {
  for (int n = 3; n <= 4; ++n)
    for (int r = 1; r <= 3; ++r)
      EXPECT_EQ(testing::charpoly_by_principal_minors(adjacency_matrix(build_staircase({n, r}))),
                phi_via_binomial(n, r));
}

TEST(Family, ZeroMultiplicityValues) {
  EXPECT_EQ(zero_multiplicity_formula(3, 8), 1);
  EXPECT_EQ(zero_multiplicity_formula(4, 10), 6);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(zero_multiplicity_formula(n, 1), 0);
  for (int n = 3; n <= 8; ++n)
    for (int r = 1; r <= 30; ++r) EXPECT_EQ(zero_multiplicity_formula(n, r), zero_multiplicity_piecewise(n, r));
}

TEST(Family, NonzeroCountValues) {
  EXPECT_EQ(nonzero_count(3, 8), 9);
  EXPECT_EQ(nonzero_count(4, 10), 16);
  EXPECT_EQ(nonzero_count(7, 1), 7);
  EXPECT_EQ(packet_count(8), 3);
  EXPECT_THROW(packet_count(0), ParameterError);
}

TEST(Family, LowestCoefficientSeeds) {
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(lowest_coefficient(n, 1), -1);
    EXPECT_EQ(lowest_coefficient(n, 2), -2);
    EXPECT_EQ(lowest_coefficient(n, 3), -3);
  }
}

TEST(Family, ReductionExponent) {
  EXPECT_EQ(reduction_exponent(3, 8, core_of(3, 8)), 1);
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(reduction_exponent(n, 1, core_of(n, 1)), 0);
}

TEST(Family, ReductionExponentCanBeNegative) {
  // Layer 0 of Gamma_{3,3} is {1, 5}: 2 > 5/3 vertices, so nu = 5 - 6 = -1
  // and x Phi_{3,3} = char_K(x^3).
  const IntMatrix k = core_of(3, 3);
  ASSERT_EQ(k.rows(), 2u);
  EXPECT_EQ(reduction_exponent(3, 3, k), -1);
  EXPECT_EQ(phi_via_recursion(3, 3).shift_by_power(1), charpoly_exact(k).dilate(3));
}

TEST(Family, ReductionExponentDetectsWrongCore) {
  EXPECT_THROW(reduction_exponent(3, 8, IntMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}), ConsistencyError);
}

TEST(Family, HPolynomials) {
  EXPECT_EQ(h_polynomial(0), IntPolynomial{1});
  EXPECT_EQ(h_polynomial(2), IntPolynomial{1});
  EXPECT_EQ(h_polynomial(3), (IntPolynomial{1, -1}));
  EXPECT_EQ(h_polynomial(5), (IntPolynomial{1, -3}));
  EXPECT_EQ(h_polynomial(6), (IntPolynomial{1, -4, 1}));
  EXPECT_THROW(h_polynomial(-1), ParameterError);
}

TEST(Family, PhiHIdentity) {
  for (int n = 3; n <= 7; ++n)
    for (int r = 1; r <= 15; ++r) EXPECT_TRUE(verify_phi_h_identity(n, r));
}

TEST(Family, HAtFourTwentySeventhsClosedForm) {
  EXPECT_EQ(h_at_4_27(0), Rational(1));
  EXPECT_EQ(h_at_4_27(3), Rational(23, 27));
  for (int m = 0; m <= 60; ++m) {
    // Independent evaluation of the recursion directly at z = 4/27.
    std::vector<Rational> h{1, 1, 1};
    for (int k = 3; k <= m; ++k) h.push_back(h[k - 1] - Rational(4, 27) * h[k - 3]);
    EXPECT_EQ(h_at_4_27(m), h[static_cast<std::size_t>(m)]);
    EXPECT_GT(h_at_4_27(m), 0);
  }
}

TEST(Family, ReconstructRoundTrip) {
  const StaircaseFingerprint fp = reconstruct_params(phi_via_binomial(3, 8));
  EXPECT_EQ(fp.n, 3);
  EXPECT_EQ(fp.r, 8);
  for (int n = 3; n <= 8; ++n)
    for (int r = 1; r <= 20; ++r) {
      const StaircaseFingerprint f = reconstruct_params(phi_via_binomial(n, r));
      EXPECT_EQ(f.n, n);
      EXPECT_EQ(f.r, r);
    }
}

TEST(Family, ReconstructRejections) {
  EXPECT_THROW(reconstruct_params(IntPolynomial{1, 0, 0, 0, 0, 1}), ReconstructionError);
  EXPECT_THROW(reconstruct_params(IntPolynomial{}), ReconstructionError);
  EXPECT_THROW(reconstruct_params(IntPolynomial{0, 0, 0, 1}), ReconstructionError);
  EXPECT_THROW(reconstruct_params(IntPolynomial{-1, -1, 1}), ReconstructionError);
  IntPolynomial tampered = phi_via_binomial(4, 9);
  tampered += IntPolynomial{0, 0, 1};
  EXPECT_THROW(reconstruct_params(tampered), ReconstructionError);
}

}  // namespace
}  // namespace staircase
