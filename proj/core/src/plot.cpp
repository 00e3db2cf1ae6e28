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

#include "staircase/plot.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <fmt/format.h>

namespace staircase {
namespace {

constexpr double kCanvas = 800.0;
constexpr double kCenter = kCanvas / 2;
constexpr double kMargin = 40.0;

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

}  // namespace

std::string spectrum_csv(const SpectrumReport& report) {
  std::ostringstream out;
  out << "re,im,packet_index\n";
  for (std::size_t i = 0; i < report.packets.size(); ++i)
    for (const auto& v : report.packets[i].vertices) out << fmt::format("{:.12g},{:.12g},{}\n", v.real(), v.imag(), i);
  return out.str();
}

std::string spectrum_svg(const SpectrumReport& report) {
  const double bound = confinement_radius(report.n);
  const double extent = std::max({bound, report.spectral_radius, 1.0}) * 1.1;
  const double scale = (kCenter - kMargin) / extent;
  auto px = [&](double x) { return kCenter + x * scale; };
  auto py = [&](double y) { return kCenter - y * scale; };

  std::ostringstream out;
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n", kCanvas);
  out << fmt::format("  <rect width=\"{0}\" height=\"{0}\" fill=\"white\"/>\n", kCanvas);
  out << fmt::format("  <title>Spectrum of A(n={}, r={})</title>\n", report.n, report.r);

  // Axes with unit ticks.
  out << fmt::format("  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n", kMargin,
                     kCenter, kCanvas - kMargin, kCenter);
  out << fmt::format("  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n", kCenter,
                     kMargin, kCenter, kCanvas - kMargin);
  for (double t : {-1.0, 1.0}) {
    out << fmt::format("  <line x1=\"{:.3f}\" y1=\"{}\" x2=\"{:.3f}\" y2=\"{}\" stroke=\"black\"/>\n", px(t),
                       kCenter - 5, px(t), kCenter + 5);
    out << fmt::format("  <line x1=\"{}\" y1=\"{:.3f}\" x2=\"{}\" y2=\"{:.3f}\" stroke=\"black\"/>\n", kCenter - 5,
                       py(t), kCenter + 5, py(t));
    out << fmt::format("  <text x=\"{:.3f}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n", px(t),
                       kCenter + 18, t > 0 ? "1" : "-1");
  }

  out << fmt::format(
      "  <circle cx=\"{}\" cy=\"{}\" r=\"{:.3f}\" fill=\"none\" stroke=\"gray\" stroke-width=\"1.5\" "
      "stroke-dasharray=\"8 5\"/>\n",
      kCenter, kCenter, bound * scale);

  if (report.zero_multiplicity > 0)
    out << fmt::format("  <rect x=\"{}\" y=\"{}\" width=\"8\" height=\"8\" fill=\"black\"/>\n", kCenter - 4,
                       kCenter - 4);

  for (std::size_t i = 0; i < report.packets.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    for (const auto& v : report.packets[i].vertices)
      out << fmt::format("  <circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"5\" fill=\"{}\" data-packet=\"{}\"/>\n",
                         px(v.real()), py(v.imag()), color, i);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace staircase
