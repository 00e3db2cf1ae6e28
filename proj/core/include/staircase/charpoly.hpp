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

#include <cstdint>
#include <string_view>
#include <vector>

#include "staircase/int_matrix.hpp"
#include "staircase/polynomial.hpp"

namespace staircase {

enum class CharpolyMethod {
  // Trace recursion M_k = A M_{k-1} + c I over Z; every division by k is
  // checked for exactness.
  kFaddeevLeVerrier,
  // Hessenberg reduction modulo several 61/62-bit primes, recombined by CRT
  // under a Hadamard coefficient bound.
  kModularHessenberg,
};

// det(xI - M), monic of degree M.rows().
IntPolynomial charpoly_exact(const IntMatrix& m,
                             CharpolyMethod method = CharpolyMethod::kFaddeevLeVerrier);

std::string_view method_name(CharpolyMethod method);

namespace detail {

// Charpoly of m reduced mod prime, ascending residues in [0, prime).
std::vector<std::uint64_t> charpoly_mod_prime(const IntMatrix& m, std::uint64_t prime);

// Bits needed to represent every |coefficient| of det(xI - m).
std::size_t charpoly_coefficient_bits(const IntMatrix& m);

// The k largest primes below 2^62.
std::vector<std::uint64_t> crt_primes(std::size_t count);

}  // namespace detail

}  // namespace staircase
