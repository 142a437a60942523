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

// Seeded generators for the fuzz and verification suites.
//
// The stream is SplitMix64 so that a seed reproduces the same vectors in
// any implementation; std engines do not pin their distributions.

#ifndef JAMESKIT_RANDOM_HPP
#define JAMESKIT_RANDOM_HPP

#include <cstdint>

#include "jameskit/bidual.hpp"
#include "jameskit/dual.hpp"

namespace jameskit {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Uniform on [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Independent stream for trial `trial` of suite `suite` under `seed`.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t suite, std::uint64_t trial) {
  SplitMix64 mix(seed ^ (suite * 0xD1B54A32D192ED03ULL));
  const std::uint64_t base = mix.next();
  return SplitMix64(base + trial * 0x9E3779B97F4A7C15ULL);
}

/// p / q with q uniform on 1..4 and p uniform on -3q..3q.
inline Rational random_coefficient(SplitMix64& rng) {
  const std::int64_t q = rng.between(1, 4);
  return Rational(rng.between(-3 * q, 3 * q), q);
}

/// Coordinates 1..len with len uniform on 1..max_len.
inline ExactVector random_exact_vector(SplitMix64& rng, Index max_len) {
  const Index len = rng.between(1, max_len);
  std::vector<Rational> coefs;
  for (Index i = 0; i < len; ++i) coefs.push_back(random_coefficient(rng));
  return ExactVector::dense(std::move(coefs));
}

/// Random vector with at least one nonzero coordinate.
inline ExactVector random_nonzero_exact_vector(SplitMix64& rng, Index max_len) {
  for (;;) {
    auto x = random_exact_vector(rng, max_len);
    if (!x.is_zero_vector()) return x;
  }
}

inline ExactBidualVector random_exact_bidual(SplitMix64& rng, Index max_len) {
  return {random_exact_vector(rng, max_len), random_coefficient(rng)};
}

/// D1-shaped functional with 1..max_terms terms, gaps of 0..2 between
/// intervals of length 1..3, an occasional tail, rescaled so that
/// sum alpha^2 <= 1.
inline ExactFunctional random_exact_functional(SplitMix64& rng, Index max_terms) {
  const Index terms = rng.between(1, max_terms);
  ExactFunctional f;
  Index next = rng.between(1, 3);
  Rational sum_sq(0);
  for (Index t = 0; t < terms; ++t) {
    const Index len = rng.between(1, 3);
    const bool tail = t + 1 == terms && rng.below(4) == 0;
    const auto iv = tail ? Interval::tail_omega(next) : Interval::finite(next, next + len - 1);
    Rational alpha = random_coefficient(rng);
    sum_sq += alpha * alpha;
    f.terms.push_back({iv, std::move(alpha)});
    next += len + rng.between(0, 2);
  }
  // Integer rescale keeps the coefficients exact.
  std::int64_t scale = 1;
  while (Rational(scale * scale) < sum_sq) ++scale;
  if (scale > 1) {
    for (auto& term : f.terms) term.alpha = term.alpha / Rational(scale);
  }
  return f;
}

}  // namespace jameskit

#endif  // JAMESKIT_RANDOM_HPP
