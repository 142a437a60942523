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

// Structure of the x-norming partitions of a finitely supported vector.
//
// A norming partition is written in canonical form: finite intervals whose
// endpoints lie in supp(x) and that together cover supp(x). Two families
// that only differ on zero coordinates are the same partition.
//
// Every function here takes a `tol` argument. It is ignored in exact mode;
// in float mode it is the relative tolerance for "attains the norm".

#ifndef JAMESKIT_PARTITION_HPP
#define JAMESKIT_PARTITION_HPP

#include <optional>
#include <vector>

#include "jameskit/norm.hpp"

namespace jameskit {

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

/// The intervals that occur in at least one norming partition, with the
/// prefix / suffix tables used to find them. Members are pairwise nested or
/// disjoint.
template <ScalarType T>
struct OptimalIntervalSet {
  std::vector<Interval> intervals;  // sorted by (lo, hi)
  std::vector<Index> support;
  std::vector<T> prefix_best;  // F(0..k) over compact support positions
  std::vector<T> suffix_best;  // G(1..k+1), index 0 unused
  T norm_sq;

  bool contains(const Interval& iv) const;
};

template <ScalarType T>
bool is_norming_family(const BasicVector<T>& x, const IntervalFamily& family, double tol = kDefaultTolerance);

/// Partition shape (see has_partition_shape) and norming.
template <ScalarType T>
bool is_norming_partition(const BasicVector<T>& x, const IntervalFamily& family, double tol = kDefaultTolerance);

/// Throws ValidationError for x = 0.
template <ScalarType T>
OptimalIntervalSet<T> optimal_intervals(const BasicVector<T>& x, double tol = kDefaultTolerance);

/// The norming partition that refines every other one: each support point
/// goes into the smallest optimal interval containing it.
template <ScalarType T>
IntervalFamily finest_partition(const BasicVector<T>& x, double tol = kDefaultTolerance);

template <ScalarType T>
struct PartitionEnumeration {
  std::vector<IntervalFamily> partitions;
  /// Set when the limit was hit; `partitions` then holds the first `limit`.
  bool truncated = false;
};

/// All norming partitions, in lexicographic order of their block ends.
template <ScalarType T>
PartitionEnumeration<T> enumerate_norming_partitions(const BasicVector<T>& x,
                                                     std::size_t limit = kDefaultEnumerationLimit,
                                                     double tol = kDefaultTolerance);

/// Number of norming partitions by a counting DP; never enumerates.
template <ScalarType T>
BigInt count_norming_partitions(const BasicVector<T>& x, double tol = kDefaultTolerance);

/// Relative gap between ||x||_J^2 and the best value of any family that is
/// not norming: (norm - best_non_norming) / norm. nullopt when every
/// candidate block is optimal (e.g. a single support point).
template <ScalarType T>
std::optional<T> optimality_margin(const BasicVector<T>& x, double tol = kDefaultTolerance);

/// True iff every block of q is a union of consecutive blocks of p.
/// Throws ValidationError if p or q is not a norming partition of x.
template <ScalarType T>
bool refines(const BasicVector<T>& x, const IntervalFamily& p, const IntervalFamily& q,
             double tol = kDefaultTolerance);

/// {I in p : I inside some L in q} together with {L in q : L inside some I in p}.
/// The result is norming and refines both; InternalError if not.
template <ScalarType T>
IntervalFamily joint_refinement(const BasicVector<T>& x, const IntervalFamily& p, const IntervalFamily& q,
                                double tol = kDefaultTolerance);

/// Structural facts every norming partition satisfies.
struct PartitionReport {
  bool covers_support = false;         // supp(x) inside the union of the blocks
  bool subfamily_tight = false;        // consecutive sub-blocks norm their own restriction
  bool same_sign_partials = false;     // block, prefix and suffix sums nonzero with one sign
  bool alternating_blocks = false;     // consecutive block sums have opposite signs
  bool same_sign_pairs_together = false;  // like-signed consecutive support points never split

  bool all() const {
    return covers_support && subfamily_tight && same_sign_partials && alternating_blocks &&
           same_sign_pairs_together;
  }
};

template <ScalarType T>
PartitionReport check_structure(const BasicVector<T>& x, const IntervalFamily& p, double tol = kDefaultTolerance);

}  // namespace jameskit

#endif  // JAMESKIT_PARTITION_HPP
