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

#include <complex>
#include <vector>

#include "staircase/int_matrix.hpp"
#include "staircase/polynomial.hpp"
#include "staircase/sturm.hpp"

namespace staircase {

// 27/4: every nonzero eigenvalue lambda of A_{n,r} has 0 < lambda^n < 27/4.
Rational tran_bound();
// (27/4)^(1/n), the radius of the confinement disk.
double confinement_radius(int n);

struct CoreEigenvalue {
  RationalInterval interval;  // exact isolating interval
  double value;               // refined to the requested tolerance
};

// Positive eigenvalues of a cyclic core, ascending. Their number must equal
// dim K - mult_0(K); anything else means a positive/simple failure and
// raises ConsistencyError.
std::vector<CoreEigenvalue> core_eigenvalues(const IntMatrix& core, double tol = kDefaultRootTolerance);

// The regular n-gon {mu^(1/n) e^(2 pi i j / n) : j = 0..n-1}; j = 0 sits on
// the positive real axis.
struct NgonPacket {
  double mu;
  double radius;
  std::vector<std::complex<double>> vertices;
};

std::vector<NgonPacket> lift_ngons(const std::vector<double>& mus, int n);

struct TranCertificate {
  long long nonzero_eigenvalues = 0;  // dim K - mult_0(K)
  long long roots_in_range = 0;       // distinct roots in (0, 27/4]
  long long roots_above = 0;          // distinct roots in (27/4, inf)
  bool boundary_is_root = false;      // char_K(27/4) == 0
  bool certified = false;
};

// Exact Sturm certificate that every nonzero core eigenvalue lies in (0, 27/4).
TranCertificate certify_tran_bound(const IntMatrix& core);
bool tran_certificate(const IntMatrix& core);

struct SpectrumReport {
  int n = 0;
  int r = 0;
  long long zero_multiplicity = 0;
  IntPolynomial core_charpoly;
  std::vector<CoreEigenvalue> core_eigenvalues;
  std::vector<NgonPacket> packets;
  TranCertificate tran;
  double spectral_radius = 0.0;

  bool tran_certified() const { return tran.certified; }
};

// Graph -> layers -> blocks -> core -> eigenvalues -> packets, with the
// count identities asserted on the way.
SpectrumReport full_spectrum(int n, int r, double tol = kDefaultRootTolerance);

// rho(A_{n,r}) for r = 1..r_max. The sequence must be nondecreasing within
// 1e-10 and stay below (27/4)^(1/n); ConsistencyError otherwise.
std::vector<double> radius_sweep(int n, int r_max);

// max |Phi(lambda)| / scale over all lifted packet vertices, where scale is
// sum |c_i| |lambda|^i. Small values mean the lifted points are roots.
double lifted_root_residual(const IntPolynomial& phi, const std::vector<NgonPacket>& packets);

}  // namespace staircase
