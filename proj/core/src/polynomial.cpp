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

#include "staircase/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "staircase/errors.hpp"

namespace staircase {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw ParameterError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::shift_by_power(long long k) const {
  if (k < 0) throw ParameterError("shift_by_power: negative exponent");
  if (is_zero()) return {};
  std::vector<BigInt> v(coeffs_.size() + static_cast<std::size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::scale(const BigInt& c) const {
  std::vector<BigInt> v(coeffs_);
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::dilate(std::size_t k) const {
  if (k == 0) throw ParameterError("dilate: factor must be positive");
  if (is_zero()) return {};
  std::vector<BigInt> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::negate_variable() const {
  std::vector<BigInt> v(coeffs_);
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long long>(i);
  return IntPolynomial(std::move(v));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  // Homogenized Horner: sum c_i num^i den^(d-i), then divide by den^d once.
  BigInt acc = coeffs_.back();
  BigInt den_power = 1;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    den_power *= den;
    acc = acc * num + coeffs_[coeffs_.size() - 1 - k] * den_power;
  }
  return Rational(acc, den_power);
}

int IntPolynomial::sign_at(const Rational& x) const {
  if (is_zero()) return 0;
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt acc = coeffs_.back();
  BigInt den_power = 1;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    den_power *= den;
    acc = acc * num + coeffs_[coeffs_.size() - 1 - k] * den_power;
  }
  return acc.sign();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (coeffs_.back().sign() < 0) g = -g;
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
IntPolynomial operator-(const IntPolynomial& a) { return a.scale(-1); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<BigInt> v(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) v[i + j] += ac[i] * bc[j];
  }
  return IntPolynomial(std::move(v));
}

long long ord_at_zero(const IntPolynomial& p) {
  if (p.is_zero()) throw ParameterError("ord_at_zero: zero polynomial");
  const auto& c = p.coefficients();
  long long k = 0;
  while (c[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ParameterError("pseudo-remainder by the zero polynomial");
  const BigInt beta = b.leading();
  const BigInt abs_beta = boost::multiprecision::abs(beta);
  const int beta_sign = beta.sign();
  const auto d = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> r(a.coefficients());
  const auto& bc = b.coefficients();
  while (!r.empty() && r.size() - 1 >= d) {
    const BigInt lead = r.back();
    const std::size_t shift = r.size() - 1 - d;
    // r <- |beta| r - sign(beta) lead x^shift b, which kills the top term.
    for (auto& c : r) c *= abs_beta;
    for (std::size_t i = 0; i < bc.size(); ++i) {
      if (beta_sign > 0)
        r[i + shift] -= lead * bc[i];
      else
        r[i + shift] += lead * bc[i];
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    // Keep coefficients from growing needlessly.
    if (!r.empty()) {
      BigInt g = 0;
      for (const auto& c : r) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
      }
      g = boost::multiprecision::abs(g);
      if (g > 1)
        for (auto& c : r) c /= g;
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw ParameterError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw ConsistencyError("exact_quotient: divisor degree exceeds dividend");
  std::vector<BigInt> r(a.coefficients());
  const auto& bc = b.coefficients();
  const BigInt& beta = bc.back();
  const auto d = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(r.size() - d);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigInt& top = r[k + d];
    if (top % beta != 0) throw ConsistencyError("exact_quotient: non-integral quotient");
    q[k] = top / beta;
    if (q[k] != 0)
      for (std::size_t i = 0; i < bc.size(); ++i) r[k + i] -= q[k] * bc[i];
  }
  for (const auto& c : r)
    if (c != 0) throw ConsistencyError("exact_quotient: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw ParameterError("squarefree_part: zero polynomial");
  if (p.degree() == 0) return IntPolynomial{1};
  const IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    BigInt mag = boost::multiprecision::abs(c[k]);
    if (first) {
      if (c[k].sign() < 0) out << '-';
    } else {
      out << (c[k].sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

}  // namespace staircase
