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

#ifndef JAMESKIT_TESTS_HELPERS_HPP
#define JAMESKIT_TESTS_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "jameskit/random.hpp"
#include "jameskit/vector.hpp"

namespace testing_helpers {

using jameskit::Rational;

inline Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(p, d); }

/// Dense exact vector x(1..n).
inline jameskit::ExactVector xv(std::initializer_list<Rational> coefs) {
  return jameskit::ExactVector::dense(std::vector<Rational>(coefs));
}

inline jameskit::FloatVector fv(std::initializer_list<double> coefs) {
  return jameskit::FloatVector::dense(std::vector<double>(coefs));
}

/// Vector whose norming partitions are rarely unique: short pieces of
/// extreme directions with alternating signs, separated by zero runs and
/// scaled by one positive rational. The bounding box stays within max_box.
inline jameskit::ExactVector tie_rich_vector(jameskit::SplitMix64& rng, jameskit::Index max_box) {
  static const std::vector<std::vector<Rational>> pieces{
      {q(1)}, {q(2), q(-1), q(2)}, {q(6), q(-2), q(3)}, {q(3), q(-2), q(6)},
      {q(2), q(-1), q(2), q(-1), q(2)}, {q(3), q(-4)}, {q(1), q(1)}};
  const Rational scale(rng.between(1, 4), rng.between(1, 4));
  std::vector<jameskit::ExactVector::Entry> entries;
  jameskit::Index next = rng.between(1, 2);
  int s = rng.below(2) == 0 ? 1 : -1;
  for (;;) {
    const auto& piece = pieces[rng.below(pieces.size())];
    if (next + static_cast<jameskit::Index>(piece.size()) - 1 > max_box) break;
    for (const auto& v : piece) entries.push_back({next++, v * scale * s});
    // Keep the sign pattern alternating across pieces most of the time.
    s = (piece.size() % 2 == 1) == (rng.below(4) != 0) ? -s : s;
    next += rng.between(0, 1);
  }
  if (entries.empty()) entries.push_back({1, scale});
  return jameskit::ExactVector::from_entries(std::move(entries));
}

}  // namespace testing_helpers

#endif  // JAMESKIT_TESTS_HELPERS_HPP
