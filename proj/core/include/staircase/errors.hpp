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

#include <stdexcept>
#include <string>

namespace staircase {

// Caller supplied a parameter outside its documented range (n < 3, r < 1,
// negative index, unknown format name, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must hold by construction failed. Seeing one of these
// means an arithmetic or bookkeeping bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exponential enumeration refused because the input exceeds the configured cap.
class DimensionCapError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A polynomial claimed to be some Phi_{n,r} is not in the family.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative refinement hit its iteration cap before reaching the tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed serialized input (JSON, coefficient files, config).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace staircase
