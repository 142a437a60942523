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

#include "jameskit/bidual.hpp"

#include <string>

#include "jameskit/errors.hpp"

namespace jameskit {
namespace {

template <ScalarType T>
struct Extended {
  BasicVector<T> vector;
  Index sentinel;
};

/// The finite part with a_omega placed right after the support.
template <ScalarType T>
Extended<T> extend(const BidualVector<T>& x) {
  const Index sentinel = x.finite.is_zero_vector() ? 1 : x.finite.max_index() + 1;
  std::vector<typename BasicVector<T>::Entry> entries(x.finite.entries().begin(), x.finite.entries().end());
  entries.push_back({sentinel, x.omega});
  return {BasicVector<T>::from_entries(std::move(entries)), sentinel};
}

Interval map_back(const Interval& iv, Index sentinel) {
  if (iv.hi() != sentinel) return iv;
  return iv.lo() == sentinel ? Interval::omega() : Interval::tail_omega(iv.lo());
}

IntervalFamily map_back(const IntervalFamily& fam, Index sentinel) {
  std::vector<Interval> out;
  for (const auto& iv : fam) out.push_back(map_back(iv, sentinel));
  return IntervalFamily(std::move(out));
}

template <ScalarType T>
void bruteforce_recurse(const std::vector<T>& box, const T& omega, std::size_t p, const T& acc, T& best) {
  const std::size_t n = box.size();
  if (p == n) {
    const T with_omega = acc + square(omega);
    if (acc > best) best = acc;
    if (with_omega > best) best = with_omega;
    return;
  }
  bruteforce_recurse(box, omega, p + 1, acc, best);
  T sum(0);
  for (std::size_t q = p; q < n; ++q) {
    sum += box[q];
    bruteforce_recurse(box, omega, q + 1, acc + square(sum), best);
  }
  // Tail [p, omega]: nothing can follow it.
  const T tail = acc + square(T(sum + omega));
  if (tail > best) best = tail;
}

}  // namespace

template <ScalarType T>
T bidual_interval_sum(const BidualVector<T>& x, const Interval& iv) {
  switch (iv.kind()) {
    case Interval::Kind::kFinite:
      return interval_sum(x.finite, iv);
    case Interval::Kind::kOmegaSingleton:
      return x.omega;
    case Interval::Kind::kTailOmega: {
      T sum = x.omega;
      for (const auto& e : x.finite.entries()) {
        if (e.index >= iv.lo()) sum += e.value;
      }
      return sum;
    }
  }
  throw InternalError("unknown interval kind");
}

template <ScalarType T>
T bidual_l2_norm_sq(const BidualVector<T>& x) {
  return l2_norm_sq(x.finite) + square(x.omega);
}

template <ScalarType T>
NormCertificate<T> bidual_norm_sq(const BidualVector<T>& x) {
  if (is_zero(x.omega)) return james_norm_sq(x.finite);
  const auto ext = extend(x);
  auto cert = james_norm_sq(ext.vector);
  return {std::move(cert.norm_sq), map_back(cert.witness, ext.sentinel)};
}

template <ScalarType T>
T bidual_norm_bruteforce_sq(const BidualVector<T>& x, std::size_t cap) {
  std::vector<T> box;
  if (!x.finite.is_zero_vector()) {
    const auto width = static_cast<std::size_t>(x.finite.max_index() - x.finite.min_index() + 1);
    if (width > cap) {
      throw CapExceededError("bidual brute-force oracle: bounding box " + std::to_string(width) + " exceeds cap " +
                             std::to_string(cap));
    }
    for (Index n = x.finite.min_index(); n <= x.finite.max_index(); ++n) box.push_back(x.finite(n));
  }
  T best(0);
  bruteforce_recurse(box, x.omega, 0, T(0), best);
  return best;
}

ExtremeCertificateJ is_extreme_BJss(const ExactBidualVector& x) {
  ExtremeCertificateJ cert;
  cert.james_sq = bidual_norm_sq(x).norm_sq;
  cert.l2_sq = bidual_l2_norm_sq(x);
  cert.verdict = cert.james_sq == cert.l2_sq && cert.l2_sq == Rational(1);
  if (is_zero(x.omega)) {
    cert.failing_interval = is_npr_hereditary(x.finite).violator;
  } else {
    const auto ext = extend(x);
    const auto scan = is_npr_hereditary(ext.vector);
    if (scan.violator) cert.failing_interval = map_back(*scan.violator, ext.sentinel);
  }
  return cert;
}

template <ScalarType T>
PartitionEnumeration<T> bidual_norming_partitions(const BidualVector<T>& x, std::size_t limit, double tol) {
  if (is_zero(x.omega)) return enumerate_norming_partitions(x.finite, limit, tol);
  const auto ext = extend(x);
  auto found = enumerate_norming_partitions(ext.vector, limit, tol);
  PartitionEnumeration<T> out;
  out.truncated = found.truncated;
  for (const auto& fam : found.partitions) out.partitions.push_back(map_back(fam, ext.sentinel));
  return out;
}

#define JAMESKIT_INSTANTIATE(T)                                                                        \
  template T bidual_interval_sum<T>(const BidualVector<T>&, const Interval&);                          \
  template T bidual_l2_norm_sq<T>(const BidualVector<T>&);                                             \
  template NormCertificate<T> bidual_norm_sq<T>(const BidualVector<T>&);                               \
  template T bidual_norm_bruteforce_sq<T>(const BidualVector<T>&, std::size_t);                        \
  template PartitionEnumeration<T> bidual_norming_partitions<T>(const BidualVector<T>&, std::size_t, double);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
