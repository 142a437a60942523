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

// Norms on finitely supported sequences. All norms are returned squared so
// exact mode never needs a square root.

#ifndef JAMESKIT_NORM_HPP
#define JAMESKIT_NORM_HPP

#include "jameskit/core.hpp"

namespace jameskit {

/// Largest bounding box the brute-force oracle accepts by default.
inline constexpr std::size_t kBruteForceCap = 14;

template <ScalarType T>
struct NormCertificate {
  T norm_sq;
  /// A norming partition attaining norm_sq; empty for the zero vector.
  IntervalFamily witness;
};

/// ||x||_J^2 = max over disjoint interval families of sum (interval sum)^2.
///
/// O(k^2) dynamic programming over the k support points; the witness is the
/// partition recovered by backtracking, already in canonical form.
template <ScalarType T>
NormCertificate<T> james_norm_sq(const BasicVector<T>& x);

/// Exhaustive maximum over every disjoint interval family inside the
/// bounding box of supp(x). Independent of the dynamic programme; throws
/// CapExceededError when the box is wider than cap.
template <ScalarType T>
T james_norm_bruteforce_sq(const BasicVector<T>& x, std::size_t cap = kBruteForceCap);

template <ScalarType T>
T l2_norm_sq(const BasicVector<T>& x);

/// Squared-variation norm of J_s:
///   ||y||_s^2 = max sum_k |y(n_k) - y(n_{k-1})|^2  over 1 <= n_0 < ... < n_m,
/// with y = 0 past its support. Computed as ||T^{-1} y||_J^2.
template <ScalarType T>
T s_norm_sq(const BasicVector<T>& y);

/// Same quantity by a direct O(m^2) chain DP over positions 1..max+1,
/// used to cross-check s_norm_sq.
template <ScalarType T>
T s_norm_sq_direct(const BasicVector<T>& y);

/// T(x)(n) = sum_{k >= n} x(k).
template <ScalarType T>
BasicVector<T> iso_T(const BasicVector<T>& x);

/// T^{-1}(y)(n) = y(n) - y(n+1).
template <ScalarType T>
BasicVector<T> iso_T_inv(const BasicVector<T>& y);

/// Reads JAMESKIT_BRUTEFORCE_CAP, falling back to kBruteForceCap.
std::size_t bruteforce_cap_from_env();

}  // namespace jameskit

#endif  // JAMESKIT_NORM_HPP
