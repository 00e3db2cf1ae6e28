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

#include <string>

#include "staircase/spectra.hpp"

namespace staircase {

// Header "re,im,packet_index", then one row per lifted eigenvalue in packet
// order. The zero eigenvalue is not listed.
std::string spectrum_csv(const SpectrumReport& report);

// 800x800 scatter plot: coordinate axes with ticks at +-1, the dashed circle
// of radius (27/4)^(1/n), lifted eigenvalues colored by packet index and a
// square marker at the origin when 0 is an eigenvalue.
std::string spectrum_svg(const SpectrumReport& report);

}  // namespace staircase
