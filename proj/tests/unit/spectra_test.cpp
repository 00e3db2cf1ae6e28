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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "staircase/charpoly.hpp"
#include "staircase/core_matrix.hpp"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/layers.hpp"
#include "staircase/spectra.hpp"

namespace staircase {
namespace {

IntMatrix core_of(int n, int r) {
  const Digraph g = build_staircase({n, r});
  return cyclic_core(block_cyclic_form(g, layer_partition(g)), 0);
}

// Floating-point eigenvalues from a general eigensolver: an independent route.
std::vector<double> eigen_positive_eigenvalues(const IntMatrix& k) {
  Eigen::MatrixXd m(k.rows(), k.cols());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) m(i, j) = k(i, j).convert_to<double>();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  std::vector<double> out;
  for (const auto& ev : solver.eigenvalues())
    if (ev.real() > 1e-6) out.push_back(ev.real());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Spectra, GoldenCoreEigenvalues) {
  const auto eig = core_eigenvalues(core_of(3, 8));
  ASSERT_EQ(eig.size(), 3u);
  EXPECT_NEAR(eig[0].value, 0.3186693564, 1e-8);
  EXPECT_NEAR(eig[1].value, 2.3579263675, 1e-8);
  EXPECT_NEAR(eig[2].value, 5.3234042761, 1e-8);
}

TEST(Spectra, TrivialCore) {
  const auto eig = core_eigenvalues(IntMatrix{{1}});
  ASSERT_EQ(eig.size(), 1u);
  EXPECT_EQ(eig[0].value, 1.0);
}

TEST(Spectra, CoreEigenvaluesOf311) {
  const auto eig = core_eigenvalues(core_of(3, 11));
  ASSERT_EQ(eig.size(), 4u);
  for (const auto& e : eig) EXPECT_LT(e.value, 6.75);
}

TEST(Spectra, CoreEigenvaluesMatchEigenSolver) {
  for (int n = 3; n <= 5; ++n)
    for (int r = 1; r <= 14; ++r) {
      const IntMatrix k = core_of(n, r);
      const auto eig = core_eigenvalues(k);
      const auto oracle = eigen_positive_eigenvalues(k);
      ASSERT_EQ(eig.size(), oracle.size()) << n << " " << r;
      for (std::size_t i = 0; i < eig.size(); ++i) EXPECT_NEAR(eig[i].value, oracle[i], 1e-7 * (1 + oracle[i]));
    }
}

TEST(Spectra, CoreEigenvaluesRejectNonpositiveSpectrum) {
  EXPECT_THROW(core_eigenvalues(IntMatrix{{0, 1}, {1, 0}}), ConsistencyError);
}

TEST(Spectra, LiftUnitSquare) {
  const auto packets = lift_ngons({1.0}, 4);
  ASSERT_EQ(packets.size(), 1u);
  const auto& v = packets[0].vertices;
  ASSERT_EQ(v.size(), 4u);
  EXPECT_NEAR(v[0].real(), 1, 1e-15);
  EXPECT_NEAR(v[1].imag(), 1, 1e-15);
  EXPECT_NEAR(v[2].real(), -1, 1e-15);
  EXPECT_EQ(v[2].imag(), 0.0);
  EXPECT_NEAR(v[3].imag(), -1, 1e-15);
}

TEST(Spectra, LiftTriangleRadius) {
  const auto packets = lift_ngons({5.3234042761}, 3);
  // cbrt(5.3234042761) = 1.746076..., i.e. 1.7461 to four places.
  EXPECT_NEAR(packets[0].radius, 1.7461, 5e-5);
  EXPECT_NEAR(packets[0].radius, std::cbrt(5.3234042761), 1e-15);
}

TEST(Spectra, LiftParity) {
  for (int n = 3; n <= 8; ++n) {
    const auto v = lift_ngons({2.5}, n)[0].vertices;
    const bool negative_axis = std::any_of(v.begin(), v.end(), [](auto z) { return z.real() < 0 && z.imag() == 0; });
    EXPECT_EQ(negative_axis, n % 2 == 0) << n;
    EXPECT_EQ(v[0].imag(), 0.0);
    EXPECT_GT(v[0].real(), 0.0);
  }
}

TEST(Spectra, LiftRejectsNonpositive) {
  EXPECT_THROW(lift_ngons({1.0, 0.0}, 3), ParameterError);
  EXPECT_THROW(lift_ngons({-2.0}, 3), ParameterError);
}

TEST(Spectra, FullSpectrumGolden) {
  const SpectrumReport rep = full_spectrum(3, 8);
  EXPECT_EQ(rep.zero_multiplicity, 1);
  EXPECT_EQ(rep.packets.size(), 3u);
  EXPECT_TRUE(rep.tran_certified());
  EXPECT_NEAR(rep.spectral_radius, std::cbrt(5.3234042761), 1e-10);
  EXPECT_EQ(rep.core_charpoly, (IntPolynomial{-4, 15, -8, 1}));
}

TEST(Spectra, FullSpectrumSingleCycle) {
  for (int n = 3; n <= 8; ++n) {
    const SpectrumReport rep = full_spectrum(n, 1);
    EXPECT_EQ(rep.zero_multiplicity, 0);
    ASSERT_EQ(rep.packets.size(), 1u);
    for (int j = 0; j < n; ++j) {
      const auto z = rep.packets[0].vertices[static_cast<std::size_t>(j)];
      EXPECT_NEAR(z.real(), std::cos(2 * std::numbers::pi * j / n), 1e-12);
      EXPECT_NEAR(z.imag(), std::sin(2 * std::numbers::pi * j / n), 1e-12);
    }
  }
}

TEST(Spectra, FullSpectrumN4R10) {
  const SpectrumReport rep = full_spectrum(4, 10);
  EXPECT_EQ(rep.zero_multiplicity, 6);
  ASSERT_EQ(rep.packets.size(), 4u);
  const bool unit = std::any_of(rep.packets.begin(), rep.packets.end(),
                                [](const NgonPacket& p) { return std::abs(p.radius - 1.0) < 1e-12; });
  EXPECT_TRUE(unit);
  EXPECT_LT(lifted_root_residual(phi_via_recursion(4, 10), rep.packets), 1e-9);
}

TEST(Spectra, TranCertificates) {
  EXPECT_TRUE(tran_certificate(core_of(3, 8)));
  EXPECT_TRUE(tran_certificate(IntMatrix{{1}}));
  const IntMatrix k330 = core_of(3, 30);
  EXPECT_TRUE(tran_certificate(k330));
  const auto eig = core_eigenvalues(k330);
  EXPECT_LT(6.75 - eig.back().value, 0.2);
}

TEST(Spectra, TranCertificateFailsOutsideTheBound) {
  const TranCertificate above = certify_tran_bound(IntMatrix{{7}});
  EXPECT_FALSE(above.certified);
  EXPECT_EQ(above.roots_above, 1);
  EXPECT_FALSE(above.boundary_is_root);
  // Eigenvalues +-1: the negative one is nonzero but not in (0, 27/4].
  const TranCertificate negative = certify_tran_bound(IntMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(negative.nonzero_eigenvalues, 2);
  EXPECT_EQ(negative.roots_in_range, 1);
  EXPECT_FALSE(negative.certified);
}

TEST(Spectra, RadiusSweep) {
  const auto radii = radius_sweep(3, 8);
  EXPECT_EQ(radii.front(), 1.0);
  EXPECT_NEAR(radii.back(), std::cbrt(5.3234042761), 1e-10);
  for (std::size_t i = 1; i < radii.size(); ++i) EXPECT_GE(radii[i], radii[i - 1] - 1e-10);
}

TEST(Spectra, ConfinementRadius) {
  EXPECT_NEAR(confinement_radius(3), 1.8899, 1e-4);
  EXPECT_EQ(tran_bound(), Rational(27, 4));
}

}  // namespace
}  // namespace staircase
