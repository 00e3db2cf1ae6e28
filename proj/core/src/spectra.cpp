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

#include "staircase/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "staircase/charpoly.hpp"
#include "staircase/core_matrix.hpp"
#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/graph.hpp"
#include "staircase/layers.hpp"

namespace staircase {
namespace {

IntMatrix build_core(int n, int r) {
  const Digraph g = build_staircase({n, r});
  const LayerPartition lp = layer_partition(g);
  return cyclic_core(block_cyclic_form(g, lp), 0);
}

std::vector<CoreEigenvalue> eigenvalues_from_charpoly(const IntPolynomial& char_k, double tol) {
  const long long expected = char_k.degree() - ord_at_zero(char_k);
  const SturmChain chain(char_k);
  const auto intervals = isolate_positive_roots(char_k);
  if (static_cast<long long>(intervals.size()) != expected)
    throw ConsistencyError("core_eigenvalues: found " + std::to_string(intervals.size()) +
                           " distinct positive roots, expected " + std::to_string(expected));
  std::vector<CoreEigenvalue> out;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) {
    const RefinedRoot root = refine_root(chain, iv, tol);
    out.push_back({root.enclosure, root.value});
  }
  return out;
}

}  // namespace

Rational tran_bound() { return Rational(27, 4); }

double confinement_radius(int n) { return std::pow(27.0 / 4.0, 1.0 / n); }

std::vector<CoreEigenvalue> core_eigenvalues(const IntMatrix& core, double tol) {
  return eigenvalues_from_charpoly(charpoly_exact(core), tol);
}

std::vector<NgonPacket> lift_ngons(const std::vector<double>& mus, int n) {
  if (n < 1) throw ParameterError("lift_ngons: n must be positive");
  std::vector<NgonPacket> packets;
  packets.reserve(mus.size());
  for (double mu : mus) {
    if (!(mu > 0)) throw ParameterError("lift_ngons: core eigenvalue must be positive");
    NgonPacket packet{mu, std::exp(std::log(mu) / n), {}};
    packet.vertices.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * j / n;
      packet.vertices.push_back(std::polar(packet.radius, angle));
    }
    // Vertex j = 0 is exactly real; for even n vertex n/2 is exactly -radius.
    packet.vertices[0] = {packet.radius, 0.0};
    if (n % 2 == 0) packet.vertices[static_cast<std::size_t>(n / 2)] = {-packet.radius, 0.0};
    packets.push_back(std::move(packet));
  }
  return packets;
}

TranCertificate certify_tran_bound(const IntMatrix& core) {
  const IntPolynomial char_k = charpoly_exact(core);
  const SturmChain chain(char_k);
  TranCertificate cert;
  cert.nonzero_eigenvalues = char_k.degree() - ord_at_zero(char_k);
  cert.roots_in_range = chain.count(0, tran_bound());
  cert.roots_above = chain.count_above(tran_bound());
  cert.boundary_is_root = char_k.sign_at(tran_bound()) == 0;
  cert.certified = cert.roots_in_range == cert.nonzero_eigenvalues && cert.roots_above == 0 && !cert.boundary_is_root;
  return cert;
}

bool tran_certificate(const IntMatrix& core) { return certify_tran_bound(core).certified; }

SpectrumReport full_spectrum(int n, int r, double tol) {
  validate({n, r});
  const IntMatrix core = build_core(n, r);
  SpectrumReport report;
  report.n = n;
  report.r = r;
  report.core_charpoly = charpoly_exact(core);
  report.core_eigenvalues = eigenvalues_from_charpoly(report.core_charpoly, tol);

  std::vector<double> mus;
  mus.reserve(report.core_eigenvalues.size());
  for (const auto& e : report.core_eigenvalues) mus.push_back(e.value);
  report.packets = lift_ngons(mus, n);
  report.tran = certify_tran_bound(core);

  const IntPolynomial phi = phi_via_recursion(n, r);
  report.zero_multiplicity = zero_multiplicity_formula(n, r);
  if (report.zero_multiplicity != ord_at_zero(phi))
    throw ConsistencyError("full_spectrum: zero multiplicity formula disagrees with ord_x Phi");
  reduction_exponent(phi, core, n);
  if (static_cast<long long>(report.packets.size()) != packet_count(r))
    throw ConsistencyError("full_spectrum: packet count is not floor((r+2)/3)");
  if (report.zero_multiplicity + static_cast<long long>(n) * static_cast<long long>(report.packets.size()) !=
      vertex_count({n, r}))
    throw ConsistencyError("full_spectrum: zero multiplicity + n * packets != |V|");
  report.spectral_radius = std::exp(std::log(mus.back()) / n);
  return report;
}

std::vector<double> radius_sweep(int n, int r_max) {
  validate({n, r_max});
  constexpr double kMonotoneSlack = 1e-10;
  const double limit = confinement_radius(n);
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(r_max));
  for (int r = 1; r <= r_max; ++r) {
    const IntMatrix core = build_core(n, r);
    const IntPolynomial char_k = charpoly_exact(core);
    const auto intervals = isolate_positive_roots(char_k);
    if (intervals.empty()) throw ConsistencyError("radius_sweep: core has no positive eigenvalue");
    const RefinedRoot top = refine_root(char_k, intervals.back());
    if (SturmChain(char_k).count_above(tran_bound()) != 0 || char_k.sign_at(tran_bound()) == 0)
      throw ConsistencyError("radius_sweep: core eigenvalue outside (0, 27/4) at r = " + std::to_string(r));
    const double rho = std::exp(std::log(top.value) / n);
    if (!radii.empty() && rho < radii.back() - kMonotoneSlack)
      throw ConsistencyError("radius_sweep: spectral radius decreased at r = " + std::to_string(r));
    if (!(rho < limit)) throw ConsistencyError("radius_sweep: radius reached (27/4)^(1/n)");
    radii.push_back(rho);
  }
  return radii;
}

double lifted_root_residual(const IntPolynomial& phi, const std::vector<NgonPacket>& packets) {
  double worst = 0.0;
  for (const auto& packet : packets) {
    for (const auto& v : packet.vertices) {
      const std::complex<long double> z(v.real(), v.imag());
      std::complex<long double> acc = 0;
      long double scale = 0;
      const long double mag = std::abs(z);
      const auto& c = phi.coefficients();
      for (std::size_t i = c.size(); i-- > 0;) {
        const auto ci = c[i].convert_to<long double>();
        acc = acc * z + ci;
        scale = scale * mag + std::fabs(ci);
      }
      if (scale > 0) worst = std::max(worst, static_cast<double>(std::abs(acc) / scale));
    }
  }
  return worst;
}

}  // namespace staircase
