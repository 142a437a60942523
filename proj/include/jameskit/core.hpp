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

#ifndef JAMESKIT_CORE_HPP
#define JAMESKIT_CORE_HPP

#include <map>
#include <utility>

#include "jameskit/interval.hpp"
#include "jameskit/vector.hpp"

namespace jameskit {

/// Sum of x(k) over a finite interval. Omega-shaped intervals only make
/// sense on bidual vectors and raise ModeMismatchError here.
template <ScalarType T>
T interval_sum(const BasicVector<T>& x, const Interval& interval);

/// sum over the family of (interval sum)^2.
template <ScalarType T>
T eval_family_sq(const BasicVector<T>& x, const IntervalFamily& family);

/// Drops intervals missing supp(x) and shrinks the rest to
/// [min(J & supp), max(J & supp)]. The evaluation is unchanged.
template <ScalarType T>
IntervalFamily canonicalize_family(const BasicVector<T>& x, const IntervalFamily& family);

/// Order-preserving relabelling of supp(x) onto {1..k}.
template <ScalarType T>
struct CompactedVector {
  BasicVector<T> vector;
  /// original index -> compact index
  std::map<Index, Index> position_map;
};

/// Throws ValidationError for the zero vector.
template <ScalarType T>
CompactedVector<T> compact_support(const BasicVector<T>& x);

/// True iff the family satisfies the endpoint rules of a partition of
/// supp(x): every interval is finite, both endpoints lie in supp(x), and the
/// intervals cover supp(x). Says nothing about optimality.
template <ScalarType T>
bool has_partition_shape(const BasicVector<T>& x, const IntervalFamily& family);

}  // namespace jameskit

#endif  // JAMESKIT_CORE_HPP
