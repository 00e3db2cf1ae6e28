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

#include <boost/multiprecision/miller_rabin.hpp>

#include "oracles.hpp"
#include "staircase/charpoly.hpp"
#include "staircase/graph.hpp"

namespace staircase {
namespace {

using testing::charpoly_by_principal_minors;
using testing::Gen;

constexpr CharpolyMethod kMethods[] = {CharpolyMethod::kFaddeevLeVerrier, CharpolyMethod::kModularHessenberg};

TEST(Charpoly, GoldenCore) {
  const IntMatrix k{{2, 3, 1}, {1, 3, 3}, {0, 1, 3}};
  for (auto m : kMethods) EXPECT_EQ(charpoly_exact(k, m), (IntPolynomial{-4, 15, -8, 1})) << method_name(m);
}

TEST(Charpoly, OneByOne) {
  for (auto m : kMethods) EXPECT_EQ(charpoly_exact(IntMatrix{{1}}, m), (IntPolynomial{-1, 1}));
}

TEST(Charpoly, RejectsNonSquare) {
  EXPECT_ANY_THROW(charpoly_exact(IntMatrix(2, 3)));
}

TEST(Charpoly, CycleAdjacencyIsXnMinusOne) {
  for (int n = 3; n <= 9; ++n) {
    IntPolynomial expected = IntPolynomial::monomial(1, static_cast<std::size_t>(n)) - IntPolynomial{1};
    for (auto m : kMethods) EXPECT_EQ(charpoly_exact(adjacency_matrix(build_staircase({n, 1})), m), expected);
  }
}

TEST(Charpoly, MatchesPrincipalMinorOracleOnRandomMatrices) {
  Gen gen(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = static_cast<std::size_t>(gen.int_in(1, 6));
    const IntMatrix a = gen.matrix(d, d, -9, 9);
    const IntPolynomial oracle = charpoly_by_principal_minors(a);
    for (auto m : kMethods) EXPECT_EQ(charpoly_exact(a, m), oracle) << to_string(a) << " " << method_name(m);
  }
}

TEST(Charpoly, HugeEntriesStillExact) {
  IntMatrix a{{0, 1}, {1, 0}};
  a(0, 1) = parse_bigint("1000000000000000000000000000000");
  a(1, 0) = parse_bigint("3000000000000000000000000000000");
  const IntPolynomial oracle = charpoly_by_principal_minors(a);
  for (auto m : kMethods) EXPECT_EQ(charpoly_exact(a, m), oracle);
}

TEST(CharpolyDetail, CrtPrimesAreDistinctPrimesBelow2To62) {
  const auto primes = detail::crt_primes(8);
  ASSERT_EQ(primes.size(), 8u);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    EXPECT_LT(primes[i], std::uint64_t{1} << 62);
    EXPECT_TRUE(boost::multiprecision::miller_rabin_test(BigInt(primes[i]), 30));
    if (i > 0) {
      EXPECT_LT(primes[i], primes[i - 1]);
    }
  }
}

TEST(CharpolyDetail, ModPrimeMatchesReducedExactResult) {
  Gen gen(7);
  const std::uint64_t p = detail::crt_primes(1).front();
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(gen.int_in(1, 7));
    const IntMatrix a = gen.matrix(d, d, -50, 50);
    const IntPolynomial exact = charpoly_by_principal_minors(a);
    const auto residues = detail::charpoly_mod_prime(a, p);
    ASSERT_EQ(residues.size(), d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
      BigInt r = exact.coefficient(i) % BigInt(p);
      if (r < 0) r += p;
      EXPECT_EQ(BigInt(residues[i]), r);
    }
  }
}

TEST(CharpolyDetail, CoefficientBitsBoundTheTruth) {
  Gen gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(gen.int_in(1, 6));
    const IntMatrix a = gen.matrix(d, d, -30, 30);
    const std::size_t bits = detail::charpoly_coefficient_bits(a);
    const IntPolynomial truth = charpoly_by_principal_minors(a);
    for (const auto& c : truth.coefficients())
      EXPECT_LE(boost::multiprecision::msb(boost::multiprecision::abs(c) + 1), bits);
  }
}

}  // namespace
}  // namespace staircase
