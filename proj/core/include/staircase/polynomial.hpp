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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "staircase/bigint.hpp"

namespace staircase {

// Dense polynomial over Z, coefficients in ascending order (index =
// exponent). Always canonical: the leading coefficient is nonzero and the
// zero polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long long> ascending);

  static IntPolynomial constant(const BigInt& c);
  // c * x^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // Coefficient of x^k, zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  const BigInt& leading() const;
  bool is_monic() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);

  // Multiply by x^k.
  IntPolynomial shift_by_power(long long k) const;
  IntPolynomial scale(const BigInt& c) const;

  // p(x^k): coefficient i moves to index i*k.
  IntPolynomial dilate(std::size_t k) const;
  // p(-x): odd coefficients change sign.
  IntPolynomial negate_variable() const;
  IntPolynomial derivative() const;

  BigInt evaluate(const BigInt& x) const;
  Rational evaluate(const Rational& x) const;
  // Sign of p(x) computed without forming the rational value.
  int sign_at(const Rational& x) const;

  // Positive gcd of the coefficients (zero for the zero polynomial).
  BigInt content() const;
  // Divides by the content; leading coefficient made positive.
  IntPolynomial primitive_part() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

// Lowest exponent with a nonzero coefficient. Throws ParameterError on zero.
long long ord_at_zero(const IntPolynomial& p);

// Remainder of a positive multiple of `a` modulo `b`: the sign structure of
// a mod b is preserved, which is what Sturm chains need.
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient a / b in Z[x]; throws ConsistencyError when b does not divide a.
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

// p / gcd(p, p'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Human-readable form, e.g. "x^3 - 8*x^2 + 15*x - 4".
std::string to_string(const IntPolynomial& p, const std::string& var = "x");

}  // namespace staircase
