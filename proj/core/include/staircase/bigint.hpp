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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Decimal string of an arbitrary-precision integer.
std::string to_string(const BigInt& value);

// "p/q" (or "p" when the denominator is 1), always in lowest terms.
std::string to_string(const Rational& value);

BigInt parse_bigint(std::string_view text);

// Accepts "p/q" or a bare integer.
Rational parse_rational(std::string_view text);

// Exact binary value of a finite double.
Rational rational_from_double(double value);

double to_double(const Rational& value);

// C(n, k) by the multiplicative recurrence; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

inline int sign(const BigInt& v) { return v.sign(); }
inline int sign(const Rational& v) { return v.sign(); }

}  // namespace staircase
