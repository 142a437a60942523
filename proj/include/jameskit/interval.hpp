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

#ifndef JAMESKIT_INTERVAL_HPP
#define JAMESKIT_INTERVAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "jameskit/scalar.hpp"

namespace jameskit {

/// An interval of N, or of the ordinal omega+1.
///
/// Three shapes exist:
///   - kFinite          [lo, hi] with 1 <= lo <= hi
///   - kTailOmega       [lo, inf) together with the point omega
///   - kOmegaSingleton  {omega}
///
/// A dual functional reuses kTailOmega for the tail [lo, inf): acting on a
/// finitely supported vector the omega point carries no mass.
class Interval {
 public:
  enum class Kind { kFinite, kTailOmega, kOmegaSingleton };

  /// Throws ValidationError unless 1 <= lo <= hi.
  static Interval finite(Index lo, Index hi);
  static Interval point(Index n) { return finite(n, n); }
  /// Throws ValidationError unless k >= 1.
  static Interval tail_omega(Index k);
  static Interval omega();

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool has_omega() const { return kind_ != Kind::kFinite; }

  /// Smallest natural number in the interval; undefined for {omega}.
  Index lo() const { return lo_; }
  /// Largest natural number; only meaningful for finite intervals.
  Index hi() const { return hi_; }

  bool contains(Index n) const;
  /// Interval containment as subsets of omega+1.
  bool contains(const Interval& other) const;
  bool intersects(const Interval& other) const;
  /// Every point of *this lies strictly before every point of other.
  bool precedes(const Interval& other) const;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Interval(Kind kind, Index lo, Index hi) : kind_(kind), lo_(lo), hi_(hi) {}

  Kind kind_ = Kind::kFinite;
  Index lo_ = 1;
  Index hi_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// Ordered list of pairwise disjoint, strictly increasing intervals.
/// Any omega-containing interval must be last.
class IntervalFamily {
 public:
  IntervalFamily() = default;
  /// Throws ValidationError on overlap, wrong order, or a misplaced omega.
  explicit IntervalFamily(std::vector<Interval> intervals);
  IntervalFamily(std::initializer_list<Interval> intervals)
      : IntervalFamily(std::vector<Interval>(intervals)) {}

  /// Non-throwing shape check behind the constructor.
  static bool is_valid(const std::vector<Interval>& intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }

  std::string to_string() const;

  friend bool operator==(const IntervalFamily&, const IntervalFamily&) = default;

 private:
  std::vector<Interval> intervals_;
};

std::ostream& operator<<(std::ostream& os, const IntervalFamily& fam);

}  // namespace jameskit

#endif  // JAMESKIT_INTERVAL_HPP
