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

#include "oracles.hpp"
#include "staircase/charpoly.hpp"
#include "staircase/core_matrix.hpp"
#include "staircase/family.hpp"
#include "staircase/layers.hpp"
#include "staircase/spectra.hpp"

namespace staircase {
namespace {

void expect_report_invariants(int n, int r) {
  SCOPED_TRACE(::testing::Message() << "n=" << n << " r=" << r);
  const SpectrumReport rep = full_spectrum(n, r);
  EXPECT_EQ(static_cast<long long>(rep.packets.size()), (r + 2) / 3);
  EXPECT_EQ(rep.zero_multiplicity + n * static_cast<long long>(rep.packets.size()), r * n - 2 * r + 2);
  EXPECT_TRUE(rep.tran_certified());
  std::vector<RationalInterval> ivs;
  for (const auto& e : rep.core_eigenvalues) {
    ivs.push_back(e.interval);
    EXPECT_LT(e.interval.hi, tran_bound());
  }
  EXPECT_TRUE(pairwise_disjoint(ivs));
  for (const auto& p : rep.packets) {
    ASSERT_EQ(static_cast<int>(p.vertices.size()), n);
    EXPECT_GT(p.vertices[0].real(), 0);
    EXPECT_LT(std::abs(p.vertices[0].imag()), 1e-9);
    bool negative_axis = false;
    for (const auto& v : p.vertices) negative_axis |= v.real() < 0 && std::abs(v.imag()) < 1e-9;
    EXPECT_EQ(negative_axis, n % 2 == 0);
    EXPECT_LT(p.radius, confinement_radius(n));
  }
  EXPECT_DOUBLE_EQ(rep.spectral_radius, std::exp(std::log(rep.core_eigenvalues.back().value) / n));
  EXPECT_LT(lifted_root_residual(phi_via_recursion(n, r), rep.packets), 1e-6);
}

TEST(SpectraProperties, ReportInvariantsOnTheGrid) {
  for (int n = 3; n <= 6; ++n)
    for (int r = 1; r <= 20; ++r) expect_report_invariants(n, r);
}

TEST(SpectraProperties, ReportInvariantsOnRandomCells) {
  testing::Gen gen(123);
  for (int trial = 0; trial < 25; ++trial) {
    const auto p = gen.params(10, 30);
    expect_report_invariants(p.n, p.r);
  }
}

TEST(CoreProperties, StructureOnTheGrid) {
  for (int n = 3; n <= 8; ++n)
    for (int r = 1; r <= 20; ++r) {
      SCOPED_TRACE(::testing::Message() << "n=" << n << " r=" << r);
      const Digraph g = build_staircase({n, r});
      const BlockCyclicForm bf = block_cyclic_form(g, layer_partition(g));
      const IntMatrix k = cyclic_core(bf, 0);
      EXPECT_TRUE(k.all_nonnegative());
      EXPECT_TRUE(is_irreducible(k));
      // Right-to-left association gives the same product.
      IntMatrix right = bf.blocks.back();
      for (int c = n - 2; c >= 0; --c) right = bf.blocks[static_cast<std::size_t>(c)] * right;
      EXPECT_EQ(right, k);
      if (n <= 6 && k.rows() <= 10) {
        EXPECT_TRUE(check_total_nonnegativity(k).all_nonnegative);
      }
      const IntPolynomial char_k = charpoly_exact(k);
      EXPECT_EQ(static_cast<long long>(isolate_positive_roots(char_k).size()),
                static_cast<long long>(k.rows()) - core_zero_multiplicity(k));
    }
}

TEST(CoreProperties, RadiusSweepIsMonotone) {
  for (int n = 3; n <= 6; ++n) {
    const auto radii = radius_sweep(n, 30);
    for (std::size_t i = 1; i < radii.size(); ++i) EXPECT_GE(radii[i], radii[i - 1] - 1e-10);
    EXPECT_LT(radii.back(), confinement_radius(n));
  }
}

}  // namespace
}  // namespace staircase
