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

#ifndef JAMESKIT_VECTOR_HPP
#define JAMESKIT_VECTOR_HPP

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "jameskit/errors.hpp"
#include "jameskit/scalar.hpp"

namespace jameskit {

/// A finitely supported sequence x = sum x(n) e_n, n >= 1.
///
/// Only nonzero coefficients are stored, sorted by index, so the stored
/// index set is exactly supp(x).
template <ScalarType T>
class BasicVector {
 public:
  using scalar_type = T;

  struct Entry {
    Index index;
    T value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  BasicVector() = default;

  /// x(i + 1) = coefs[i]; zeros are dropped.
  static BasicVector dense(std::vector<T> coefs) {
    BasicVector out;
    for (std::size_t i = 0; i < coefs.size(); ++i) {
      if (!is_zero(coefs[i])) out.entries_.push_back({static_cast<Index>(i) + 1, std::move(coefs[i])});
    }
    return out;
  }

  /// Entries in any order; indices must be >= 1 and distinct. Zeros are dropped.
  static BasicVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    BasicVector out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].index < 1) throw ValidationError("vector index must be >= 1, got " + std::to_string(entries[i].index));
      if (i > 0 && entries[i].index == entries[i - 1].index) {
        throw ValidationError("duplicate vector index " + std::to_string(entries[i].index));
      }
      if (!is_zero(entries[i].value)) out.entries_.push_back(std::move(entries[i]));
    }
    return out;
  }

  static BasicVector unit(Index n) { return from_entries({{n, T(1)}}); }

  std::span<const Entry> entries() const { return entries_; }
  bool is_zero_vector() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  /// Requires a nonzero vector.
  Index min_index() const { return entries_.front().index; }
  Index max_index() const { return entries_.back().index; }

  std::vector<Index> support() const {
    std::vector<Index> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.index);
    return out;
  }

  std::vector<T> values() const {
    std::vector<T> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.value);
    return out;
  }

  /// x(n), zero off the support.
  T operator()(Index n) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                               [](const Entry& e, Index k) { return e.index < k; });
    return (it != entries_.end() && it->index == n) ? it->value : T(0);
  }

  /// x restricted to [lo, hi].
  BasicVector restricted(Index lo, Index hi) const {
    BasicVector out;
    for (const auto& e : entries_) {
      if (lo <= e.index && e.index <= hi) out.entries_.push_back(e);
    }
    return out;
  }

  BasicVector scaled(const T& factor) const {
    std::vector<Entry> out;
    for (const auto& e : entries_) out.push_back({e.index, e.value * factor});
    return from_entries(std::move(out));
  }

  /// Dense coefficient list x(1..max_index).
  std::vector<T> to_dense() const {
    std::vector<T> out(entries_.empty() ? 0 : static_cast<std::size_t>(max_index()), T(0));
    for (const auto& e : entries_) out[static_cast<std::size_t>(e.index - 1)] = e.value;
    return out;
  }

  friend bool operator==(const BasicVector&, const BasicVector&) = default;

 private:
  std::vector<Entry> entries_;
};

using ExactVector = BasicVector<Rational>;
using FloatVector = BasicVector<double>;

template <ScalarType To, ScalarType From>
BasicVector<To> convert_vector(const BasicVector<From>& x) {
  std::vector<typename BasicVector<To>::Entry> out;
  for (const auto& e : x.entries()) {
    if constexpr (std::is_same_v<To, From>) {
      out.push_back({e.index, e.value});
    } else {
      out.push_back({e.index, scalar_from_double<To>(to_double(e.value))});
    }
  }
  return BasicVector<To>::from_entries(std::move(out));
}

}  // namespace jameskit

#endif  // JAMESKIT_VECTOR_HPP
