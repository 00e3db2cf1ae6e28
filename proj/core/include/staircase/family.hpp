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

#include <utility>

#include "staircase/bigint.hpp"
#include "staircase/charpoly.hpp"
#include "staircase/int_matrix.hpp"
#include "staircase/polynomial.hpp"

namespace staircase {

// Characteristic polynomial Phi_{n,r} = det(xI - A_{n,r}) taken straight from
// the built adjacency matrix.
IntPolynomial phi_via_determinant(int n, int r,
                                  CharpolyMethod method = CharpolyMethod::kFaddeevLeVerrier);

// Seeds Phi_{n,1..3} from adjacency determinants, then
// Phi_{n,r} = x^(n-2) Phi_{n,r-1} - x^(2(n-3)) Phi_{n,r-3} for r >= 4.
IntPolynomial phi_via_recursion(int n, int r);

// sum_{j=0}^{floor((r+2)/3)} (-1)^j C(r+2-2j, j) x^((n-2)r+2-nj).
IntPolynomial phi_via_binomial(int n, int r);

// ord_x Phi_{n,r} = rn - 2r + 2 - n floor((r+2)/3). The piecewise-by-(r mod 3)
// form is evaluated too and must agree (ConsistencyError otherwise).
long long zero_multiplicity_formula(int n, int r);
long long zero_multiplicity_piecewise(int n, int r);

// n floor((r+2)/3).
long long nonzero_count(int n, int r);

// Number of regular n-gon packets, floor((r+2)/3).
long long packet_count(int r);

// Coefficient of x^(zero multiplicity) in Phi_{n,r}, read off the binomial
// form. Computed values for r = 1, 2, 3 are -1, -2, -3.
BigInt lowest_coefficient(int n, int r);

// nu = deg Phi - n dim K, after checking Phi(x) = x^nu char_K(x^n) exactly.
// nu is negative when the core's layer holds more than |V|/n vertices; the
// check is then x^(-nu) Phi = char_K(x^n). ConsistencyError on failure.
long long reduction_exponent(const IntPolynomial& phi, const IntMatrix& core, int n);
// Same, with Phi_{n,r} from the recursion route.
long long reduction_exponent(int n, int r, const IntMatrix& core);

// Polynomials in z with sum_m H_m(z) t^m = 1 / (1 - t + z t^3):
// H_0 = H_1 = H_2 = 1, H_m = H_{m-1} - z H_{m-3}.
IntPolynomial h_polynomial(int m);

// Phi_{n,r}(x) == x^((n-2)r+2) H_{r+2}(x^-n), compared coefficientwise with
// the recursion route. The substitution is an exponent map j -> (n-2)r+2-nj.
bool verify_phi_h_identity(int n, int r);

// H_m(4/27), checked against ((-1)^m + (6m+8) 2^m) / (9 3^m) and for positivity.
Rational h_at_4_27(int m);
Rational h_at_4_27_closed_form(int m);

struct StaircaseFingerprint {
  int n;
  int r;
  friend bool operator==(const StaircaseFingerprint&, const StaircaseFingerprint&) = default;
};

// n is the gap between the two highest exponents and r the magnitude of the
// second coefficient; the candidate is then checked against the binomial
// form. ReconstructionError when p is not some Phi_{n,r}.
StaircaseFingerprint reconstruct_params(const IntPolynomial& p);

}  // namespace staircase
