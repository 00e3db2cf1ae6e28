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

#include "staircase/sequences.hpp"

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "staircase/errors.hpp"
#include "staircase/family.hpp"
#include "staircase/graph.hpp"

namespace staircase {
namespace {

class PadovanTable {
 public:
  BigInt get(long long m) {
    {
      std::shared_lock lock(mutex_);
      if (auto v = lookup(m)) return *v;
    }
    std::unique_lock lock(mutex_);
    if (m >= 0) {
      while (static_cast<long long>(forward_.size()) <= m) {
        const std::size_t i = forward_.size();
        forward_.push_back(forward_[i - 2] + forward_[i - 3]);
      }
    } else {
      // backward_[i] holds P_{-(i+1)}.
      while (static_cast<long long>(backward_.size()) < -m) {
        const long long idx = -static_cast<long long>(backward_.size()) - 1;
        backward_.push_back(*lookup(idx + 3) - *lookup(idx + 1));
      }
    }
    return *lookup(m);
  }

 private:
  std::optional<BigInt> lookup(long long m) const {
    if (m >= 0) {
      if (m < static_cast<long long>(forward_.size())) return forward_[static_cast<std::size_t>(m)];
      return std::nullopt;
    }
    const auto i = static_cast<std::size_t>(-m - 1);
    if (i < backward_.size()) return backward_[i];
    return std::nullopt;
  }

  std::shared_mutex mutex_;
  std::vector<BigInt> forward_{1, 1, 1};
  std::vector<BigInt> backward_;
};

PadovanTable& padovan_table() {
  static PadovanTable table;
  return table;
}

}  // namespace

BigInt padovan(long long m) { return padovan_table().get(m); }

const std::set<long long>& padovan_zero_indices() {
  static const std::set<long long> zeros{-17, -8, -4, -3, -1};
  return zeros;
}

std::set<long long> padovan_zeros_in_window(long long lo, long long hi) {
  if (lo > hi) throw ParameterError("padovan window: lo must not exceed hi");
  std::set<long long> zeros;
  for (long long m = lo; m <= hi; ++m)
    if (padovan(m) == 0) zeros.insert(m);
  return zeros;
}

bool verify_padovan_zero_window(long long lo, long long hi) {
  std::set<long long> expected;
  for (long long z : padovan_zero_indices())
    if (lo <= z && z <= hi) expected.insert(z);
  return padovan_zeros_in_window(lo, hi) == expected;
}

BigInt phi_at_one(int n, int r) {
  const BigInt value = phi_via_recursion(n, r).evaluate(BigInt(1));
  BigInt expected = padovan(-static_cast<long long>(r) - 7);
  if (r % 2 == 1) expected = -expected;
  if (value != expected)
    throw ConsistencyError("phi_at_one: Phi(1) != (-1)^r P_{-r-7} at (n, r) = (" + std::to_string(n) + ", " +
                           std::to_string(r) + ")");
  return value;
}

bool rational_candidate_bound_holds() {
  // (27/4)^(1/3) < 2  <=>  27/4 < 2^3.
  return Rational(27, 4) < Rational(8);
}

std::set<int> classify_rational_eigenvalues(int n, int r) {
  validate({n, r});
  if (!rational_candidate_bound_holds()) throw ConsistencyError("classify: candidate bound failed");
  std::set<int> result;
  if (padovan(-static_cast<long long>(r) - 7) == 0) {
    result.insert(1);
    if (n % 2 == 0) result.insert(-1);
  }
  const IntPolynomial phi = phi_via_recursion(n, r);
  for (int candidate : {1, -1}) {
    const bool root = phi.evaluate(BigInt(candidate)) == 0;
    if (root != result.contains(candidate))
      throw ConsistencyError("classify: exact evaluation at " + std::to_string(candidate) +
                             " disagrees with the classification for (n, r) = (" + std::to_string(n) + ", " +
                             std::to_string(r) + ")");
  }
  return result;
}

IntPolynomial narayana_binomial(int m) {
  if (m < 0) throw ParameterError("narayana: m must be >= 0");
  if (m == 0) return {};
  std::vector<BigInt> coeffs(static_cast<std::size_t>(m));
  for (long long j = 0; j <= (m - 1) / 3; ++j) coeffs[static_cast<std::size_t>(m - 1 - 3 * j)] += binomial(m - 1 - 2 * j, j);
  return IntPolynomial(std::move(coeffs));
}

NarayanaPoly narayana_poly(int m) {
  if (m < 0) throw ParameterError("narayana: m must be >= 0");
  std::vector<IntPolynomial> seq{IntPolynomial{}, IntPolynomial{1}, IntPolynomial{0, 1}};
  const IntPolynomial k{0, 1};
  for (int i = 3; i <= m; ++i) seq.push_back(k * seq[i - 1] + seq[i - 3]);
  IntPolynomial poly = seq[static_cast<std::size_t>(m)];
  if (poly != narayana_binomial(m))
    throw ConsistencyError("narayana: recursion and binomial forms disagree at m = " + std::to_string(m));
  return {m, std::move(poly)};
}

bool verify_narayana_dictionary(int m) {
  if (m < 4) throw ParameterError("narayana dictionary: m must be >= 4");
  IntPolynomial twisted = phi_via_recursion(3, m - 3).negate_variable();
  if ((m + 1) % 2 != 0) twisted = -twisted;
  return narayana_poly(m).poly == twisted;
}

NarayanaRootPackage narayana_root_package(int m) {
  if (m < 1) throw ParameterError("narayana root package: m must be >= 1");
  const IntPolynomial poly = narayana_poly(m).poly;
  NarayanaRootPackage pkg;
  pkg.ord_k = ord_at_zero(poly);
  if (pkg.ord_k != (m - 1) % 3)
    throw ConsistencyError("narayana: ord_k pattern fails at m = " + std::to_string(m));
  for (int candidate : {1, -1})
    if (poly.evaluate(BigInt(candidate)) == 0) pkg.rational_nonzero_roots.insert(candidate);
  if (pkg.rational_nonzero_roots.contains(1))
    throw ConsistencyError("narayana: k = 1 is a root at m = " + std::to_string(m));
  if (pkg.rational_nonzero_roots.contains(-1) != (m == 4 || m == 13))
    throw ConsistencyError("narayana: k = -1 root pattern fails at m = " + std::to_string(m));
  return pkg;
}

NarayanaRealRoots narayana_nonzero_real_roots(int m) {
  const IntPolynomial poly = narayana_poly(m).poly;
  NarayanaRealRoots out;
  if (poly.is_zero()) return out;
  const auto ord = static_cast<std::size_t>(ord_at_zero(poly));
  const IntPolynomial stripped(std::vector<BigInt>(poly.coefficients().begin() + static_cast<std::ptrdiff_t>(ord),
                                                   poly.coefficients().end()));
  out.positive = isolate_positive_roots(stripped);
  out.negative_mirrored = isolate_positive_roots(stripped.negate_variable());
  out.nonzero_roots_simple = squarefree_part(stripped).degree() == stripped.degree();
  return out;
}

}  // namespace staircase
