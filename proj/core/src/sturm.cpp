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

#include "staircase/sturm.hpp"

#include <algorithm>
#include <string>

#include "staircase/errors.hpp"

namespace staircase {

bool pairwise_disjoint(std::vector<RationalInterval> intervals) {
  // (lo, hi] is open on the left; a point interval {hi} is closed.
  auto left = [](const RationalInterval& iv) { return iv.lo == iv.hi ? iv.hi : iv.lo; };
  std::sort(intervals.begin(), intervals.end(),
            [&](const RationalInterval& a, const RationalInterval& b) { return left(a) < left(b); });
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].hi < intervals[i].lo) return false;
    if (i + 1 == intervals.size()) break;
    const auto& next = intervals[i + 1];
    const bool next_open = next.lo != next.hi;
    if (intervals[i].hi > left(next)) return false;
    if (intervals[i].hi == left(next) && !next_open) return false;
  }
  return true;
}

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) throw ParameterError("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(chain_.front().derivative().primitive_part());
  while (true) {
    const IntPolynomial& prev = chain_[chain_.size() - 2];
    const IntPolynomial& cur = chain_.back();
    if (cur.degree() == 0) break;
    IntPolynomial rem = positive_pseudo_remainder(prev, cur);
    if (rem.is_zero()) break;
    // Next member is -(positive multiple of remainder), scaled by a positive content.
    IntPolynomial next = -rem;
    const BigInt content = next.content();
    if (content > 1) {
      std::vector<BigInt> coeffs(next.coefficients());
      for (auto& c : coeffs) c /= content;
      next = IntPolynomial(std::move(coeffs));
    }
    chain_.push_back(std::move(next));
  }
}

long long SturmChain::variations_at(const Rational& x) const {
  long long changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long long SturmChain::variations_at_infinity(bool positive) const {
  long long changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = q.leading().sign();
    if (!positive && (q.degree() % 2 == 1)) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long long SturmChain::count(const Rational& a, const Rational& b) const {
  if (!(a < b)) throw ParameterError("sturm_count: requires a < b");
  return variations_at(a) - variations_at(b);
}

long long SturmChain::count_above(const Rational& a) const {
  return variations_at(a) - variations_at_infinity(true);
}

long long SturmChain::count_all() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

long long sturm_count(const IntPolynomial& p, const Rational& a, const Rational& b) {
  return SturmChain(p).count(a, b);
}

BigInt cauchy_root_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw ParameterError("root bound of the zero polynomial");
  const BigInt lead = boost::multiprecision::abs(p.leading());
  BigInt max_coeff = 0;
  for (std::size_t i = 0; i + 1 < p.coefficients().size(); ++i)
    max_coeff = std::max(max_coeff, BigInt(boost::multiprecision::abs(p.coefficients()[i])));
  BigInt q = max_coeff / lead;
  if (q * lead != max_coeff) q += 1;
  return 1 + q;
}

std::vector<RationalInterval> isolate_positive_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw ParameterError("isolate_positive_roots: zero polynomial");
  std::vector<RationalInterval> out;
  if (p.degree() == 0) return out;
  const SturmChain chain(p);
  const Rational bound(cauchy_root_bound(p));

  struct Pending {
    RationalInterval iv;
    long long roots;
  };
  std::vector<Pending> stack;
  const long long total = chain.count(0, bound);
  if (total > 0) stack.push_back({{Rational(0), bound}, total});
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.roots == 1) {
      out.push_back(cur.iv);
      continue;
    }
    const Rational mid = (cur.iv.lo + cur.iv.hi) / 2;
    const long long left = chain.count(cur.iv.lo, mid);
    const long long right = cur.roots - left;
    if (right > 0) stack.push_back({{mid, cur.iv.hi}, right});
    if (left > 0) stack.push_back({{cur.iv.lo, mid}, left});
  }
  std::sort(out.begin(), out.end(),
            [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
  return out;
}

RefinedRoot refine_root(const IntPolynomial& p, const RationalInterval& iv, double tol) {
  return refine_root(SturmChain(p), iv, tol);
}

RefinedRoot refine_root(const SturmChain& chain, const RationalInterval& iv, double tol) {
  if (!(tol > 0)) throw ParameterError("refine_root: tolerance must be positive");
  const IntPolynomial& f = chain.squarefree();
  Rational lo = iv.lo;
  Rational hi = iv.hi;
  auto exact_hit = [](const Rational& x) {
    return RefinedRoot{to_double(x), RationalInterval{x, x}};
  };
  if (lo == hi) return exact_hit(hi);
  if (f.sign_at(hi) == 0) return exact_hit(hi);
  if (chain.count(lo, hi) != 1) throw ParameterError("refine_root: interval does not isolate one root");

  const Rational tolerance = rational_from_double(tol);
  int iterations = 0;
  // lo may be a neighbouring root excluded by the half-open convention;
  // move it off with Sturm-guided steps before switching to sign bisection.
  while (f.sign_at(lo) == 0) {
    if (++iterations > kMaxBisections) break;
    const Rational mid = (lo + hi) / 2;
    if (chain.count(lo, mid) == 1) {
      if (f.sign_at(mid) == 0) return exact_hit(mid);
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const int sign_lo = f.sign_at(lo);
  while (hi - lo >= tolerance) {
    if (++iterations > kMaxBisections)
      throw ConvergenceError("refine_root: tolerance not reached within " +
                             std::to_string(kMaxBisections) + " bisections");
    const Rational mid = (lo + hi) / 2;
    const int s = f.sign_at(mid);
    if (s == 0) return exact_hit(mid);
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  return RefinedRoot{to_double((lo + hi) / 2), RationalInterval{lo, hi}};
}

}  // namespace staircase
