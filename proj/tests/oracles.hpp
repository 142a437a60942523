// Copyright 2026 The jameskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations. They enumerate instead of
// optimising and share no code with the library beyond the vector and
// scalar types.

#ifndef JAMESKIT_TESTS_ORACLES_HPP
#define JAMESKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "jameskit/bidual.hpp"
#include "jameskit/dual.hpp"
#include "jameskit/random.hpp"

namespace oracle {

using jameskit::Index;
using jameskit::Interval;
using jameskit::IntervalFamily;

template <class T>
T plain_sum(const jameskit::BasicVector<T>& x, Index lo, Index hi) {
  T s(0);
  for (Index n = lo; n <= hi; ++n) s += x(n);
  return s;
}

/// Every family of disjoint intervals inside [lo, hi], as explicit lists.
inline void families_in(Index lo, Index hi, std::vector<Interval>& cur, std::vector<std::vector<Interval>>& out) {
  out.push_back(cur);
  for (Index a = lo; a <= hi; ++a) {
    for (Index b = a; b <= hi; ++b) {
      cur.push_back(Interval::finite(a, b));
      families_in(b + 1, hi, cur, out);
      cur.pop_back();
    }
  }
}

inline std::vector<std::vector<Interval>> all_families(Index lo, Index hi) {
  std::vector<std::vector<Interval>> out;
  std::vector<Interval> cur;
  families_in(lo, hi, cur, out);
  return out;
}

/// max over every family in the bounding box of the sum of squared sums.
template <class T>
T james_sq(const jameskit::BasicVector<T>& x) {
  if (x.is_zero_vector()) return T(0);
  T best(0);
  for (const auto& fam : all_families(x.min_index(), x.max_index())) {
    T v(0);
    for (const auto& iv : fam) {
      const T s = plain_sum(x, iv.lo(), iv.hi());
      v += s * s;
    }
    if (v > best) best = v;
  }
  return best;
}

/// Canonical partitions of supp(x) (compositions of the support into runs)
/// attaining the maximum of their value, compared with tolerance tol.
template <class T>
std::vector<IntervalFamily> norming_partitions(const jameskit::BasicVector<T>& x, double tol = 1e-9) {
  const auto supp = x.support();
  const std::size_t k = supp.size();
  std::vector<std::pair<std::vector<Interval>, T>> all;
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (k - 1)); ++cuts) {
    std::vector<Interval> fam;
    T v(0);
    std::size_t start = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const bool cut_after = i + 1 == k || ((cuts >> i) & 1U);
      if (!cut_after) continue;
      const T s = plain_sum(x, supp[start], supp[i]);
      v += s * s;
      fam.push_back(Interval::finite(supp[start], supp[i]));
      start = i + 1;
    }
    all.emplace_back(std::move(fam), std::move(v));
  }
  T best(0);
  for (const auto& [fam, v] : all) {
    if (v > best) best = v;
  }
  std::vector<IntervalFamily> out;
  for (const auto& [fam, v] : all) {
    if (jameskit::near(v, best, tol)) out.emplace_back(fam);
  }
  // Lexicographic in the sequence of block ends.
  std::sort(out.begin(), out.end(), [](const IntervalFamily& a, const IntervalFamily& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Interval& u, const Interval& v) { return u.hi() < v.hi(); });
  });
  return out;
}

/// ||y||_s^2 by enumerating every chain n_0 < ... < n_m in 1..max+1.
template <class T>
T s_norm_sq(const jameskit::BasicVector<T>& y) {
  if (y.is_zero_vector()) return T(0);
  const Index top = y.max_index() + 1;
  T best(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << top); ++mask) {
    T v(0);
    bool have_prev = false;
    T prev(0);
    for (Index n = 1; n <= top; ++n) {
      if (!((mask >> (n - 1)) & 1U)) continue;
      const T cur = y(n);
      if (have_prev) v += (cur - prev) * (cur - prev);
      prev = cur;
      have_prev = true;
    }
    if (v > best) best = v;
  }
  return best;
}

/// Bidual norm: families of intervals of omega+1 inside the bounding box,
/// optionally closed by a tail [k, omega] or by {omega}.
template <class T>
T bidual_sq(const jameskit::BidualVector<T>& x) {
  const auto& f = x.finite;
  const Index lo = f.is_zero_vector() ? 1 : f.min_index();
  const Index hi = f.is_zero_vector() ? 0 : f.max_index();
  T best(0);
  for (const auto& fam : all_families(lo, hi)) {
    T v(0);
    for (const auto& iv : fam) {
      const T s = plain_sum(f, iv.lo(), iv.hi());
      v += s * s;
    }
    const Index free_from = fam.empty() ? lo : fam.back().hi() + 1;
    // Closing with nothing, with {omega}, or with a tail starting in the free part.
    if (v > best) best = v;
    const T with_omega = v + x.omega * x.omega;
    if (with_omega > best) best = with_omega;
    for (Index k = free_from; k <= hi; ++k) {
      const T s = plain_sum(f, k, hi) + x.omega;
      const T with_tail = v + s * s;
      if (with_tail > best) best = with_tail;
    }
  }
  return best;
}

/// Rational extreme points of B_J used to build norm-one functionals.
inline std::vector<std::vector<jameskit::Rational>> extreme_catalog() {
  using R = jameskit::Rational;
  return {
      {R(1)},
      {R(-1)},
      {R(3, 5), R(-4, 5)},
      {R(-4, 5), R(3, 5)},
      {R(2, 3), R(-1, 3), R(2, 3)},
      {R(-2, 3), R(1, 3), R(-2, 3)},
      {R(2, 7), R(-3, 7), R(6, 7)},
      {R(1, 2), R(-1, 2), R(1, 2), R(-1, 2)},
  };
}

}  // namespace oracle

#endif  // JAMESKIT_TESTS_ORACLES_HPP
