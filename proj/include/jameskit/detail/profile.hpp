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

// Block-partition dynamic programming over a compacted coefficient list
// c[1..k]. Positions are 1-based throughout to match the recurrences:
//
//   F(0) = 0,   F(j) = max_{1<=i<=j} F(i-1) + S(i,j)^2
//   G(k+1) = 0, G(i) = max_{i<=j<=k} S(i,j)^2 + G(j+1)
//
// where S(i,j) = c[i] + ... + c[j]. Since every c[i] is nonzero, the best
// disjoint family over the list always covers it, so F(k) = G(1) is the
// James norm squared.

#ifndef JAMESKIT_DETAIL_PROFILE_HPP
#define JAMESKIT_DETAIL_PROFILE_HPP

#include <cassert>
#include <utility>
#include <vector>

#include "jameskit/scalar.hpp"

namespace jameskit::detail {

template <ScalarType T>
class Profile {
 public:
  Profile() : prefix_{T(0)} {}
  explicit Profile(std::vector<T> values) : values_(std::move(values)) {
    prefix_.reserve(values_.size() + 1);
    prefix_.push_back(T(0));
    for (const auto& v : values_) prefix_.push_back(prefix_.back() + v);
  }

  std::size_t size() const { return values_.size(); }
  const T& value(std::size_t i) const { return values_[i - 1]; }
  /// S(i, j), 1 <= i <= j <= size().
  T sum(std::size_t i, std::size_t j) const { return prefix_[j] - prefix_[i - 1]; }
  T sum_sq(std::size_t i, std::size_t j) const {
    T s = sum(i, j);
    return s * s;
  }

 private:
  std::vector<T> values_;
  std::vector<T> prefix_;
};

template <ScalarType T>
struct PartitionTables {
  std::vector<T> prefix_best;        // F(0..k)
  std::vector<T> suffix_best;        // G(1..k+1), stored at [i]
  std::vector<std::size_t> argstart; // smallest i attaining F(j) (exact) / first strict max (float)

  const T& total() const { return prefix_best.back(); }

  /// Best value of a partition that contains block [i, j].
  T best_with_block(const Profile<T>& p, std::size_t i, std::size_t j) const {
    return prefix_best[i - 1] + p.sum_sq(i, j) + suffix_best[j + 1];
  }
};

template <ScalarType T>
PartitionTables<T> build_tables(const Profile<T>& p) {
  const std::size_t k = p.size();
  PartitionTables<T> t;
  t.prefix_best.assign(k + 1, T(0));
  t.argstart.assign(k + 1, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    T best = p.sum_sq(1, j);
    std::size_t arg = 1;
    for (std::size_t i = 2; i <= j; ++i) {
      T cand = t.prefix_best[i - 1] + p.sum_sq(i, j);
      if (cand > best) {
        best = std::move(cand);
        arg = i;
      }
    }
    t.prefix_best[j] = std::move(best);
    t.argstart[j] = arg;
  }
  t.suffix_best.assign(k + 2, T(0));
  for (std::size_t i = k; i >= 1; --i) {
    T best = p.sum_sq(i, k);
    for (std::size_t j = i; j < k; ++j) {
      T cand = p.sum_sq(i, j) + t.suffix_best[j + 1];
      if (cand > best) best = std::move(cand);
    }
    t.suffix_best[i] = std::move(best);
  }
  return t;
}

/// Blocks (i, j) of the partition found by backtracking argstart.
template <ScalarType T>
std::vector<std::pair<std::size_t, std::size_t>> backtrack(const PartitionTables<T>& t) {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t j = t.prefix_best.size() - 1;
  while (j > 0) {
    const std::size_t i = t.argstart[j];
    assert(i >= 1 && i <= j);
    blocks.emplace_back(i, j);
    j = i - 1;
  }
  return {blocks.rbegin(), blocks.rend()};
}

}  // namespace jameskit::detail

#endif  // JAMESKIT_DETAIL_PROFILE_HPP
