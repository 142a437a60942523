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

// Extreme points of B_J with prescribed numbers of norming partitions.
// These need square roots, so everything here is float mode.

#ifndef JAMESKIT_CONSTRUCTIONS_HPP
#define JAMESKIT_CONSTRUCTIONS_HPP

#include <vector>

#include "jameskit/vector.hpp"

namespace jameskit {

/// (a1, a2, a3) with a1, a3 > 0 > a2 and a1 + a2 + a3 = a1^2 + a2^2 + a3^2 = 1.
struct ESetPoint {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

/// Largest of |sum - 1| and |sum of squares - 1|.
double e_set_residual(const ESetPoint& p);

/// The unique E-set point with first coordinate a1; ValidationError unless
/// 0 < a1 < 1.
ESetPoint e_set_point(double a1);

/// a_1 = r_1, then for each m the pair (a_{2m}, a_{2m+1}) with
///   r_m + a_{2m} + a_{2m+1} = r_{m+1},  r_m^2 + a_{2m}^2 + a_{2m+1}^2 = r_{m+1}^2.
/// Returns 2k - 1 numbers for k radii. ValidationError unless r is strictly
/// increasing, r_1 >= 1/sqrt(2) and r_k = 1 (both up to 1e-12).
std::vector<double> prop65_sequence(const std::vector<double>& r);

struct Prop65Report {
  /// Worst residual of a_1 = r_1 and of the partial-sum identities
  /// sum_{j<=2m+1} a_j = r_{m+1}, sum_{j<=2m+1} a_j^2 = r_{m+1}^2.
  double identity_residual = 0.0;
  /// min over the intervals I with #I > 1 and (min I > 1 or max I even) of
  /// sum_I a_j^2 - (sum_I a_j)^2. Positive iff every strict inequality holds.
  double min_margin = 0.0;
  std::size_t intervals_checked = 0;
};

Prop65Report check_prop65(const std::vector<double>& r, const std::vector<double>& a);

/// e_1 for k = 1; otherwise the prop65 vector for r_i = sqrt(1/2 + (i-1)/(2(k-1))).
/// Has exactly k norming partitions. ValidationError for k < 1.
FloatVector multi_partition_vector(Index k);

/// B consecutive blocks of six coordinates, block n holding
/// 2^-n (a1, a2, a3, -a3, -a2, -a1). Has 4^B norming partitions.
/// ValidationError for B < 1 or a p off the E-set.
FloatVector block_product_vector(Index blocks, const ESetPoint& p);
FloatVector block_product_vector(Index blocks);

/// Precondition of the scalar lemma: eps != 0, delta * eps > 0 and
/// rho + gamma^2 <= (gamma + eps)^2.
template <ScalarType T>
bool lemma_l1_precondition(const T& rho, const T& gamma, const T& eps, const T& delta) {
  return !is_zero(eps) && sign(delta) * sign(eps) > 0 && rho + square(gamma) <= square(T(gamma + eps));
}

/// The implication instance: precondition => rho + (gamma+delta)^2 < (gamma+delta+eps)^2.
/// True whenever the precondition fails.
template <ScalarType T>
bool lemma_l1_predicate(const T& rho, const T& gamma, const T& eps, const T& delta) {
  if (!lemma_l1_precondition(rho, gamma, eps, delta)) return true;
  const T gd = gamma + delta;
  return rho + square(gd) < square(T(gd + eps));
}

}  // namespace jameskit

#endif  // JAMESKIT_CONSTRUCTIONS_HPP
