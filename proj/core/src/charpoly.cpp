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

#include "staircase/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>

#include "staircase/errors.hpp"

namespace staircase {
namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 base, u64 exp, u64 p) {
  u64 result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 reduce(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r.sign() < 0) r += p;
  return r.convert_to<u64>();
}

IntPolynomial faddeev_leverrier(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    if (trace % k != 0) throw ConsistencyError("Faddeev-LeVerrier: trace not divisible by step index");
    c[n - k] = -(trace / k);
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    m = std::move(am);
  }
  // After n steps m = A*adj-term + c_0 I must vanish (Cayley-Hamilton).
  for (const auto& v : m.entries())
    if (v != 0) throw ConsistencyError("Faddeev-LeVerrier: Cayley-Hamilton residual is nonzero");
  return IntPolynomial(std::move(c));
}

IntPolynomial modular_hessenberg(const IntMatrix& m) {
  const std::size_t bits = detail::charpoly_coefficient_bits(m);
  const std::size_t count = (bits + 2 + 60) / 61;
  const auto primes = detail::crt_primes(count);
  const std::size_t n = m.rows();

  std::vector<BigInt> value(n + 1);
  BigInt modulus = 1;
  for (std::size_t t = 0; t < count; ++t) {
    const u64 p = primes[t];
    const auto residues = detail::charpoly_mod_prime(m, p);
    const u64 modulus_mod_p = reduce(modulus, p);
    const u64 inv = inv_mod(modulus_mod_p, p);
    for (std::size_t i = 0; i <= n; ++i) {
      const u64 current = reduce(value[i], p);
      const u64 diff = (residues[i] + p - current) % p;
      const u64 step = mul_mod(diff, inv, p);
      value[i] += modulus * step;
    }
    modulus *= p;
  }
  const BigInt half = modulus / 2;
  for (auto& v : value)
    if (v > half) v -= modulus;
  return IntPolynomial(std::move(value));
}

}  // namespace

IntPolynomial charpoly_exact(const IntMatrix& m, CharpolyMethod method) {
  if (!m.is_square()) throw ParameterError("charpoly_exact: matrix must be square");
  IntPolynomial result = method == CharpolyMethod::kFaddeevLeVerrier ? faddeev_leverrier(m)
                                                                      : modular_hessenberg(m);
  if (result.degree() != static_cast<long long>(m.rows()) || !result.is_monic())
    throw ConsistencyError("charpoly_exact: result is not monic of full degree");
  return result;
}

std::string_view method_name(CharpolyMethod method) {
  switch (method) {
    case CharpolyMethod::kFaddeevLeVerrier:
      return "faddeev-leverrier";
    case CharpolyMethod::kModularHessenberg:
      return "modular-hessenberg";
  }
  return "unknown";
}

namespace detail {

std::vector<u64> charpoly_mod_prime(const IntMatrix& m, u64 p) {
  const std::size_t n = m.rows();
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = reduce(m(i, j), p);

  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && h[i][col] == 0) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      std::swap(h[i], h[piv_row]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][piv_row]);
    }
    const u64 t_inv = inv_mod(h[piv_row][col], p);
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      const u64 u = mul_mod(h[r][col], t_inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        h[r][j] = (h[r][j] + p - mul_mod(u, h[piv_row][j], p)) % p;
      for (std::size_t q = 0; q < n; ++q) h[q][piv_row] = (h[q][piv_row] + mul_mod(u, h[q][r], p)) % p;
    }
  }

  // Leading principal charpolys p_0..p_n of the Hessenberg matrix.
  std::vector<std::vector<u64>> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t a = k - 1;
    std::vector<u64> next(k + 1, 0);
    // (x - h_aa) p_{k-1}
    for (std::size_t d = 0; d < poly[k - 1].size(); ++d) {
      next[d + 1] = (next[d + 1] + poly[k - 1][d]) % p;
      next[d] = (next[d] + p - mul_mod(h[a][a], poly[k - 1][d], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      t = mul_mod(t, h[i][i - 1], p);
      if (t == 0) break;
      const u64 coef = mul_mod(h[i - 1][a], t, p);
      if (coef != 0) {
        for (std::size_t d = 0; d < poly[i - 1].size(); ++d)
          next[d] = (next[d] + p - mul_mod(coef, poly[i - 1][d], p)) % p;
      }
    }
    poly[k] = std::move(next);
  }
  return poly[n];
}

std::size_t charpoly_coefficient_bits(const IntMatrix& m) {
  const std::size_t n = m.rows();
  // log2 of each row's Euclidean norm, floored at 0 (norm >= 1 is still a valid bound).
  std::vector<double> log_norms(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt sq = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) sq += m(i, j) * m(i, j);
    if (sq > 1) log_norms[i] = (static_cast<double>(boost::multiprecision::msb(sq)) + 1.0) / 2.0;
  }
  std::sort(log_norms.begin(), log_norms.end(), std::greater<>());
  // |e_k| <= C(n,k) * (product of the k largest row norms) by Hadamard.
  double best = 0.0;
  double row_sum = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    row_sum += log_norms[k - 1];
    const double log_binom =
        (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::log(2.0);
    best = std::max(best, log_binom + row_sum);
  }
  return static_cast<std::size_t>(std::ceil(best)) + 2;
}

std::vector<u64> crt_primes(std::size_t count) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (1ULL << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return {primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(count)};
}

}  // namespace detail

}  // namespace staircase
