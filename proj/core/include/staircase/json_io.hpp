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

#include <nlohmann/json.hpp>

#include "staircase/core_matrix.hpp"
#include "staircase/int_matrix.hpp"
#include "staircase/layers.hpp"
#include "staircase/polynomial.hpp"
#include "staircase/spectra.hpp"
#include "staircase/sturm.hpp"

namespace staircase {

using Json = nlohmann::ordered_json;

// Ascending coefficients as decimal strings: x^3 - 1 -> ["-1","0","0","1"].
Json polynomial_to_json(const IntPolynomial& p);
// Accepts an array of integer strings or JSON integers, or an object with a
// "coefficients" member holding such an array. FormatError otherwise.
IntPolynomial polynomial_from_json(const Json& j);

// "p/q", or "p" when the denominator is 1.
Json rational_to_json(const Rational& q);
Json interval_to_json(const RationalInterval& iv);

// Entries that fit in 64 bits are JSON integers, larger ones decimal strings.
Json matrix_to_json(const IntMatrix& m);

Json layers_to_json(const LayerPartition& lp, const BlockCyclicForm& bf);
Json tn_report_to_json(const TNReport& report);
Json spectrum_to_json(const SpectrumReport& report);

}  // namespace staircase
