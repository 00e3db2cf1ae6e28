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

#include "staircase/family.hpp"

#include <string>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/graph.hpp"

namespace staircase {

IntPolynomial phi_via_determinant(int n, int r, CharpolyMethod method) {
  return charpoly_exact(adjacency_matrix(build_staircase({n, r})), method);
}

IntPolynomial phi_via_recursion(int n, int r) {
  validate({n, r});
  std::vector<IntPolynomial> phi;
  phi.reserve(static_cast<std::size_t>(r));
  for (int seed = 1; seed <= std::min(r, 3); ++seed) phi.push_back(phi_via_determinant(n, seed));
  for (int k = 4; k <= r; ++k) {
    phi.push_back(phi[k - 2].shift_by_power(n - 2) - phi[k - 4].shift_by_power(2 * (n - 3)));
  }
  IntPolynomial result = phi.back();
  if (result.degree() != vertex_count({n, r}) || !result.is_monic())
    throw ConsistencyError("phi_via_recursion: result is not monic of degree |V|");
  return result;
}

IntPolynomial phi_via_binomial(int n, int r) {
  validate({n, r});
  const long long top = static_cast<long long>(n - 2) * r + 2;
  std::vector<BigInt> coeffs(static_cast<std::size_t>(top) + 1);
  for (long long j = 0; j <= (r + 2) / 3; ++j) {
    BigInt c = binomial(r + 2 - 2 * j, j);
    if (j % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(top - n * j)] += c;
  }
  return IntPolynomial(std::move(coeffs));
}

long long zero_multiplicity_piecewise(int n, int r) {
  validate({n, r});
  const long long slope = 2LL * n - 6;
  auto third = [](long long v) {
    if (v % 3 != 0) throw ConsistencyError("zero multiplicity: piecewise term not divisible by 3");
    return v / 3;
  };
  switch (r % 3) {
    case 1:
      return third(slope * (r - 1));
    case 2:
      return third(slope * (r - 2)) + (n - 2);
    default:
      return third(slope * (r - 3)) + 2LL * (n - 2);
  }
}

long long zero_multiplicity_formula(int n, int r) {
  validate({n, r});
  const long long value = static_cast<long long>(r) * n - 2LL * r + 2 - static_cast<long long>(n) * ((r + 2) / 3);
  if (value != zero_multiplicity_piecewise(n, r))
    throw ConsistencyError("zero multiplicity: floor and piecewise forms disagree");
  return value;
}

long long packet_count(int r) {
  if (r < 1) throw ParameterError("r must be >= 1");
  return (r + 2) / 3;
}

long long nonzero_count(int n, int r) {
  validate({n, r});
  return static_cast<long long>(n) * packet_count(r);
}

BigInt lowest_coefficient(int n, int r) {
  const IntPolynomial phi = phi_via_binomial(n, r);
  return phi.coefficient(static_cast<std::size_t>(ord_at_zero(phi)));
}

long long reduction_exponent(const IntPolynomial& phi, const IntMatrix& core, int n) {
  if (n < 1) throw ParameterError("reduction_exponent: n must be positive");
  const long long nu = phi.degree() - static_cast<long long>(n) * static_cast<long long>(core.rows());
  const IntPolynomial lifted = charpoly_exact(core).dilate(static_cast<std::size_t>(n));
  // A layer larger than |V|/n gives nu < 0; the identity then lives in Z[x, 1/x].
  const bool holds = nu >= 0 ? lifted.shift_by_power(nu) == phi : lifted == phi.shift_by_power(-nu);
  if (!holds) throw ConsistencyError("reduction_exponent: Phi != x^nu char_K(x^n)");
  return nu;
}

long long reduction_exponent(int n, int r, const IntMatrix& core) {
  return reduction_exponent(phi_via_recursion(n, r), core, n);
}

IntPolynomial h_polynomial(int m) {
  if (m < 0) throw ParameterError("h_polynomial: m must be >= 0");
  std::vector<IntPolynomial> h{IntPolynomial{1}, IntPolynomial{1}, IntPolynomial{1}};
  const IntPolynomial z{0, 1};
  for (int k = 3; k <= m; ++k) h.push_back(h[k - 1] - z * h[k - 3]);
  return h[static_cast<std::size_t>(m)];
}

bool verify_phi_h_identity(int n, int r) {
  validate({n, r});
  const IntPolynomial h = h_polynomial(r + 2);
  const long long top = static_cast<long long>(n - 2) * r + 2;
  std::vector<BigInt> expanded(static_cast<std::size_t>(top) + 1);
  for (std::size_t j = 0; j < h.coefficients().size(); ++j) {
    const long long exponent = top - static_cast<long long>(n) * static_cast<long long>(j);
    if (exponent < 0) {
      if (h.coefficients()[j] != 0) return false;
      continue;
    }
    expanded[static_cast<std::size_t>(exponent)] += h.coefficients()[j];
  }
  return IntPolynomial(std::move(expanded)) == phi_via_recursion(n, r);
}

Rational h_at_4_27_closed_form(int m) {
  if (m < 0) throw ParameterError("h_at_4_27: m must be >= 0");
  const BigInt sign = m % 2 == 0 ? 1 : -1;
  const BigInt numerator = sign + BigInt(6LL * m + 8) * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(m));
  const BigInt denominator = 9 * boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(m));
  return Rational(numerator, denominator);
}

Rational h_at_4_27(int m) {
  const Rational value = h_polynomial(m).evaluate(Rational(4, 27));
  if (value != h_at_4_27_closed_form(m))
    throw ConsistencyError("h_at_4_27: exact value disagrees with the closed form at m = " + std::to_string(m));
  if (value.sign() <= 0) throw ConsistencyError("h_at_4_27: value is not positive");
  return value;
}

StaircaseFingerprint reconstruct_params(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() < 3) throw ReconstructionError("reconstruct: degree too small for any Phi_{n,r}");
  const auto& c = p.coefficients();
  const long long top = p.degree();
  long long second = top - 1;
  while (second >= 0 && c[static_cast<std::size_t>(second)] == 0) --second;
  if (second < 0) throw ReconstructionError("reconstruct: polynomial has a single term");
  const long long gap = top - second;
  const BigInt r_big = boost::multiprecision::abs(c[static_cast<std::size_t>(second)]);
  if (gap < 3 || r_big < 1 || r_big > 1'000'000)
    throw ReconstructionError("reconstruct: top terms do not match x^d - r x^(d-n)");
  const int n = static_cast<int>(gap);
  const int r = r_big.convert_to<int>();
  if (static_cast<long long>(n - 2) * r + 2 != top)
    throw ReconstructionError("reconstruct: degree is not (n-2)r+2 for the candidate (n, r)");
  if (p != phi_via_binomial(n, r))
    throw ReconstructionError("reconstruct: candidate (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                              ") does not reproduce the polynomial");
  return {n, r};
}

}  // namespace staircase
