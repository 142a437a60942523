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

// Functionals f = sum_i alpha_i I_i^* on J, where I^*(x) is the sum of x
// over I. The intervals are finite and increasing, except that the last one
// may be a tail [k, inf), stored as Interval::tail_omega(k).
//
// D1 is the set of such f with sum alpha_i^2 <= 1. Only D1-shaped
// functionals are handled; there is no general dual norm.

#ifndef JAMESKIT_DUAL_HPP
#define JAMESKIT_DUAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "jameskit/extreme.hpp"

namespace jameskit {

template <ScalarType T>
struct DualTerm {
  Interval interval;
  T alpha;
  friend bool operator==(const DualTerm&, const DualTerm&) = default;
};

/// Terms are kept as given; zero coefficients are legal data.
template <ScalarType T>
struct DualFunctional {
  std::vector<DualTerm<T>> terms;
  friend bool operator==(const DualFunctional&, const DualFunctional&) = default;
};

using ExactFunctional = DualFunctional<Rational>;
using FloatFunctional = DualFunctional<double>;

template <ScalarType To, ScalarType From>
DualFunctional<To> convert_functional(const DualFunctional<From>& f) {
  DualFunctional<To> out;
  for (const auto& t : f.terms) {
    if constexpr (std::is_same_v<To, From>) {
      out.terms.push_back({t.interval, t.alpha});
    } else {
      out.terms.push_back({t.interval, scalar_from_double<To>(to_double(t.alpha))});
    }
  }
  return out;
}

/// Throws ValidationError on an {omega} interval.
template <ScalarType T>
T eval_dual(const DualFunctional<T>& f, const BasicVector<T>& x);

/// Intervals increasing and disjoint, only the last one a tail, and
/// sum alpha^2 <= 1.
template <ScalarType T>
bool validate_D1(const DualFunctional<T>& f, double tol = kDefaultTolerance);

/// w = sum_i alpha_i e_i.
template <ScalarType T>
BasicVector<T> coefficient_vector(const DualFunctional<T>& f);

/// ||f||_* = 1, which for D1 holds iff w is extreme in B_J.
/// ValidationError if f is not in D1.
template <ScalarType T>
bool is_norm_one_D1(const DualFunctional<T>& f, double tol = kDefaultTolerance);

inline constexpr const char* kReasonZeroCoefficient = "zero_coefficient";
inline constexpr const char* kReasonCoefficientsNotExtreme = "coefficients_not_extreme";
inline constexpr const char* kReasonUnionNotInterval = "union_not_interval";

struct DualExtremeVerdict {
  bool extreme = false;
  /// First failing clause, one of the kReason* strings; empty when extreme.
  std::string reason;
};

/// f is extreme in B_{J*} iff all alpha_i != 0, w is extreme in B_J and
/// the union of the intervals is an interval. ValidationError if not D1.
template <ScalarType T>
DualExtremeVerdict is_extreme_BJstar(const DualFunctional<T>& f, double tol = kDefaultTolerance);

/// g(i) = min I_{i+1} - max I_i - 1, and 0 for the last term.
template <ScalarType T>
std::vector<Index> gap_profile(const DualFunctional<T>& f);

/// For norm-one D1 functionals with nonzero coefficients: true iff no gap
/// equals 1. ValidationError outside that domain.
template <ScalarType T>
bool in_closure_of_extremes(const DualFunctional<T>& f, double tol = kDefaultTolerance);

struct ApproxStep {
  FloatFunctional functional;
  /// Upper bound on ||functional - f||_* from the coefficient l2 norm.
  double distance_bound = 0.0;
};

/// Extreme functional near f: each gap of length g >= 2 is split into its
/// first floor(g/2) points L_i and the rest M_i, which receive -s beta and
/// +s beta (s the sign of alpha_i), beta = 1 / (2m sqrt(2 #gaps)); the sum
/// is then rescaled to norm one. The normalisation needs a square root,
/// so the result is always in float mode.
template <ScalarType T>
ApproxStep approx_extreme_sequence(const DualFunctional<T>& f, Index m, double tol = kDefaultTolerance);

/// Squared bounds lower_sq <= ||f||_*^2 <= upper_sq, with
/// upper_sq = sum alpha^2 and lower_sq the better of
/// (sum alpha^2)^2 / ||w||_J^2 and max alpha_i^2.
template <ScalarType T>
struct DualNormBounds {
  T lower_sq;
  T upper_sq;
};

/// ValidationError on a malformed interval list.
template <ScalarType T>
DualNormBounds<T> dual_norm_bounds(const DualFunctional<T>& f, double tol = kDefaultTolerance);

template <ScalarType T>
struct Decomposition {
  DualFunctional<T> y;
  DualFunctional<T> z;
  T lambda;
};

/// f = lambda y + (1 - lambda) z with y != z in B_{J*}, built by stretching
/// the two terms around the first gap over the gap. Zero terms are dropped
/// first. ValidationError if f is not D1, the union has no gap, or the two
/// coefficients around the gap share a sign.
template <ScalarType T>
Decomposition<T> decompose_non_extreme(const DualFunctional<T>& f, double tol = kDefaultTolerance);

}  // namespace jameskit

#endif  // JAMESKIT_DUAL_HPP
