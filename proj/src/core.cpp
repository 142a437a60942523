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

#include "jameskit/core.hpp"

#include "jameskit/errors.hpp"

namespace jameskit {

template <ScalarType T>
T interval_sum(const BasicVector<T>& x, const Interval& interval) {
  if (!interval.is_finite()) {
    throw ModeMismatchError("omega interval " + interval.to_string() + " applied to a vector of J");
  }
  T sum(0);
  for (const auto& e : x.entries()) {
    if (e.index > interval.hi()) break;
    if (e.index >= interval.lo()) sum += e.value;
  }
  return sum;
}

template <ScalarType T>
T eval_family_sq(const BasicVector<T>& x, const IntervalFamily& family) {
  T total(0);
  for (const auto& iv : family) total += square(interval_sum(x, iv));
  return total;
}

template <ScalarType T>
IntervalFamily canonicalize_family(const BasicVector<T>& x, const IntervalFamily& family) {
  std::vector<Interval> out;
  const auto entries = x.entries();
  for (const auto& iv : family) {
    if (!iv.is_finite()) {
      throw ModeMismatchError("omega interval " + iv.to_string() + " applied to a vector of J");
    }
    Index first = 0;
    Index last = 0;
    for (const auto& e : entries) {
      if (e.index > iv.hi()) break;
      if (e.index < iv.lo()) continue;
      if (first == 0) first = e.index;
      last = e.index;
    }
    if (first != 0) out.push_back(Interval::finite(first, last));
  }
  return IntervalFamily(std::move(out));
}

template <ScalarType T>
CompactedVector<T> compact_support(const BasicVector<T>& x) {
  if (x.is_zero_vector()) throw ValidationError("compact_support of the zero vector");
  CompactedVector<T> out;
  std::vector<typename BasicVector<T>::Entry> entries;
  Index next = 1;
  for (const auto& e : x.entries()) {
    out.position_map.emplace(e.index, next);
    entries.push_back({next, e.value});
    ++next;
  }
  out.vector = BasicVector<T>::from_entries(std::move(entries));
  return out;
}

template <ScalarType T>
bool has_partition_shape(const BasicVector<T>& x, const IntervalFamily& family) {
  std::size_t covered = 0;
  for (const auto& iv : family) {
    if (!iv.is_finite()) return false;
    if (is_zero(x(iv.lo())) || is_zero(x(iv.hi()))) return false;
  }
  for (const auto& e : x.entries()) {
    for (const auto& iv : family) {
      if (iv.contains(e.index)) {
        ++covered;
        break;
      }
    }
  }
  return covered == x.support_size();
}

#define JAMESKIT_INSTANTIATE(T)                                                            \
  template T interval_sum<T>(const BasicVector<T>&, const Interval&);                      \
  template T eval_family_sq<T>(const BasicVector<T>&, const IntervalFamily&);              \
  template IntervalFamily canonicalize_family<T>(const BasicVector<T>&, const IntervalFamily&); \
  template CompactedVector<T> compact_support<T>(const BasicVector<T>&);                   \
  template bool has_partition_shape<T>(const BasicVector<T>&, const IntervalFamily&);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
