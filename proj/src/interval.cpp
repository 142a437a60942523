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

#include "jameskit/interval.hpp"

#include <ostream>

#include "jameskit/errors.hpp"

namespace jameskit {

Interval Interval::finite(Index lo, Index hi) {
  if (lo < 1 || hi < lo) {
    throw ValidationError("invalid interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
  return Interval(Kind::kFinite, lo, hi);
}

Interval Interval::tail_omega(Index k) {
  if (k < 1) throw ValidationError("invalid tail start " + std::to_string(k));
  return Interval(Kind::kTailOmega, k, k);
}

Interval Interval::omega() { return Interval(Kind::kOmegaSingleton, 0, 0); }

bool Interval::contains(Index n) const {
  switch (kind_) {
    case Kind::kFinite:
      return lo_ <= n && n <= hi_;
    case Kind::kTailOmega:
      return lo_ <= n;
    case Kind::kOmegaSingleton:
      return false;
  }
  return false;
}

bool Interval::contains(const Interval& other) const {
  switch (kind_) {
    case Kind::kOmegaSingleton:
      return other.kind_ == Kind::kOmegaSingleton;
    case Kind::kTailOmega:
      return other.kind_ == Kind::kOmegaSingleton || lo_ <= other.lo_;
    case Kind::kFinite:
      return other.kind_ == Kind::kFinite && lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  return false;
}

bool Interval::intersects(const Interval& other) const {
  if (has_omega() && other.has_omega()) return true;
  if (other.kind_ == Kind::kOmegaSingleton || kind_ == Kind::kOmegaSingleton) return false;
  const bool this_bounded = is_finite();
  const bool other_bounded = other.is_finite();
  if (this_bounded && other_bounded) return lo_ <= other.hi_ && other.lo_ <= hi_;
  if (this_bounded) return hi_ >= other.lo_;
  return other.hi_ >= lo_;
}

bool Interval::precedes(const Interval& other) const {
  if (has_omega()) return false;
  if (other.kind_ == Kind::kOmegaSingleton) return true;
  return hi_ < other.lo_;
}

std::string Interval::to_string() const {
  switch (kind_) {
    case Kind::kFinite:
      return lo_ == hi_ ? "{" + std::to_string(lo_) + "}"
                        : "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]";
    case Kind::kTailOmega:
      return "[" + std::to_string(lo_) + ",w]";
    case Kind::kOmegaSingleton:
      return "{w}";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << iv.to_string(); }

bool IntervalFamily::is_valid(const std::vector<Interval>& intervals) {
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    if (!intervals[i].precedes(intervals[i + 1])) return false;
  }
  return true;
}

IntervalFamily::IntervalFamily(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (!is_valid(intervals_)) {
    throw ValidationError("interval family is not disjoint and increasing: " + to_string());
  }
}

std::string IntervalFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) out += ", ";
    out += intervals_[i].to_string();
  }
  return out + "}";
}

std::ostream& operator<<(std::ostream& os, const IntervalFamily& fam) { return os << fam.to_string(); }

}  // namespace jameskit
