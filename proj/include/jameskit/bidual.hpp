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

// Vectors of J** modelled over omega+1: a finitely supported part plus one
// coefficient on e_omega.
//
// Every interval of omega+1 that contains omega is a tail [k, omega] or
// {omega}, so omega behaves like one extra coordinate after the finite
// support. The algorithms below append it as a sentinel coordinate and map
// the blocks back.

#ifndef JAMESKIT_BIDUAL_HPP
#define JAMESKIT_BIDUAL_HPP

#include "jameskit/extreme.hpp"
#include "jameskit/partition.hpp"

namespace jameskit {

template <ScalarType T>
struct BidualVector {
  BasicVector<T> finite;
  T omega = T(0);

  friend bool operator==(const BidualVector&, const BidualVector&) = default;
};

using ExactBidualVector = BidualVector<Rational>;

/// e_omega.
template <ScalarType T>
BidualVector<T> omega_unit() {
  return {BasicVector<T>{}, T(1)};
}

/// Sum of x** over an interval of omega+1.
template <ScalarType T>
T bidual_interval_sum(const BidualVector<T>& x, const Interval& iv);

/// sum a_n^2 + a_omega^2.
template <ScalarType T>
T bidual_l2_norm_sq(const BidualVector<T>& x);

/// Max over disjoint interval families of omega+1 of sum (interval sum)^2.
/// The witness uses tail_omega(k) / omega() for the block holding omega.
template <ScalarType T>
NormCertificate<T> bidual_norm_sq(const BidualVector<T>& x);

/// Exhaustive search over families of intervals in the bounding box plus
/// omega. CapExceededError past cap finite positions.
template <ScalarType T>
T bidual_norm_bruteforce_sq(const BidualVector<T>& x, std::size_t cap = kBruteForceCap);

/// verdict = (bidual norm^2 = l2 norm^2 = 1). failing_interval is the first
/// interval of omega+1 without NPR.
ExtremeCertificateJ is_extreme_BJss(const ExactBidualVector& x);

template <ScalarType T>
PartitionEnumeration<T> bidual_norming_partitions(const BidualVector<T>& x,
                                                  std::size_t limit = kDefaultEnumerationLimit,
                                                  double tol = kDefaultTolerance);

}  // namespace jameskit

#endif  // JAMESKIT_BIDUAL_HPP
