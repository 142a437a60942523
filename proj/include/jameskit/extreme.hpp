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

// Extreme points of the unit balls of J and J_s.
//
// x is extreme in B_J iff ||x||_J = ||x||_2 = 1, equivalently iff x has NPR
// hereditarily and ||x||_2 = 1. Exact verdicts need exact scalars, so the
// B_J tests take ExactVector; the scale-free direction test works in both
// modes.

#ifndef JAMESKIT_EXTREME_HPP
#define JAMESKIT_EXTREME_HPP

#include <optional>
#include <vector>

#include "jameskit/norm.hpp"

namespace jameskit {

struct ExtremeCertificateJ {
  bool verdict = false;
  Rational james_sq;
  Rational l2_sq;
  /// First interval I with |sum_I x|^2 > sum_I x^2, if any.
  std::optional<Interval> failing_interval;
};

/// NPR: |sum_n x(n)|^2 <= sum_n x(n)^2.
template <ScalarType T>
bool is_npr(const BasicVector<T>& x, double tol = kDefaultTolerance);

struct NprScan {
  bool hereditary = true;
  std::optional<Interval> violator;
};

/// Scans every subinterval [lo, hi] of the bounding box, lo-major, and
/// stops at the first one whose restriction lacks NPR.
template <ScalarType T>
NprScan is_npr_hereditary(const BasicVector<T>& x, double tol = kDefaultTolerance);

ExtremeCertificateJ is_extreme_BJ(const ExactVector& x);

/// x / ||x||_J is extreme, i.e. ||x||_J^2 = ||x||_2^2. False for x = 0.
template <ScalarType T>
bool is_extreme_direction(const BasicVector<T>& x, double tol = kDefaultTolerance);

/// sum_i b_i e_{k_i} with b_i the sum of x over the i-th interval of fam.
/// fam must norm x and positions must be strictly increasing, >= 1, and as
/// many as the intervals; ValidationError otherwise.
template <ScalarType T>
BasicVector<T> extreme_from_family(const BasicVector<T>& x, const IntervalFamily& fam,
                                   const std::vector<Index>& positions, double tol = kDefaultTolerance);

/// y extreme in B_{J_s}: T^{-1} y has NPR hereditarily and unit l2 norm.
bool is_extreme_BJs(const ExactVector& y);

/// y / ||y||_s extreme in B_{J_s}.
template <ScalarType T>
bool is_extreme_direction_Js(const BasicVector<T>& y, double tol = kDefaultTolerance);

}  // namespace jameskit

#endif  // JAMESKIT_EXTREME_HPP
