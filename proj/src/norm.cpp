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

#include "jameskit/norm.hpp"

#include <cstdlib>
#include <string>

#include "jameskit/detail/profile.hpp"
#include "jameskit/errors.hpp"

namespace jameskit {
namespace {

// Positions above this make the direct s-norm chain DP quadratic in a
// number that no longer fits the cross-check role.
constexpr Index kDirectSNormCap = 4096;

template <ScalarType T>
void bruteforce_recurse(const detail::Profile<T>& box, std::size_t p, const T& acc, T& best) {
  const std::size_t n = box.size();
  if (p > n) {
    if (acc > best) best = acc;
    return;
  }
  bruteforce_recurse(box, p + 1, acc, best);
  for (std::size_t q = p; q <= n; ++q) {
    bruteforce_recurse(box, q + 1, acc + box.sum_sq(p, q), best);
  }
}

}  // namespace

template <ScalarType T>
NormCertificate<T> james_norm_sq(const BasicVector<T>& x) {
  if (x.is_zero_vector()) return {T(0), IntervalFamily{}};
  const auto entries = x.entries();
  const detail::Profile<T> profile(x.values());
  const auto tables = detail::build_tables(profile);
  std::vector<Interval> witness;
  for (const auto& [i, j] : detail::backtrack(tables)) {
    witness.push_back(Interval::finite(entries[i - 1].index, entries[j - 1].index));
  }
  return {tables.total(), IntervalFamily(std::move(witness))};
}

template <ScalarType T>
T james_norm_bruteforce_sq(const BasicVector<T>& x, std::size_t cap) {
  if (x.is_zero_vector()) return T(0);
  const auto width = static_cast<std::size_t>(x.max_index() - x.min_index() + 1);
  if (width > cap) {
    throw CapExceededError("brute-force oracle: bounding box " + std::to_string(width) + " exceeds cap " +
                           std::to_string(cap));
  }
  std::vector<T> box;
  box.reserve(width);
  for (Index n = x.min_index(); n <= x.max_index(); ++n) box.push_back(x(n));
  const detail::Profile<T> profile(std::move(box));
  T best(0);
  bruteforce_recurse(profile, 1, T(0), best);
  return best;
}

template <ScalarType T>
T l2_norm_sq(const BasicVector<T>& x) {
  T total(0);
  for (const auto& e : x.entries()) total += square(e.value);
  return total;
}

template <ScalarType T>
T s_norm_sq(const BasicVector<T>& y) {
  return james_norm_sq(iso_T_inv(y)).norm_sq;
}

template <ScalarType T>
T s_norm_sq_direct(const BasicVector<T>& y) {
  if (y.is_zero_vector()) return T(0);
  const Index top = y.max_index() + 1;
  if (top > kDirectSNormCap) {
    throw CapExceededError("direct s-norm: support reaches index " + std::to_string(y.max_index()));
  }
  // best[j]: largest sum of squared jumps over chains n_0 < ... < n_m = j.
  // Position top lies past the support, where y vanishes.
  std::vector<T> values(static_cast<std::size_t>(top) + 1, T(0));
  for (const auto& e : y.entries()) values[static_cast<std::size_t>(e.index)] = e.value;
  std::vector<T> best(values.size(), T(0));
  T overall(0);
  for (std::size_t j = 2; j < values.size(); ++j) {
    T b(0);
    for (std::size_t i = 1; i < j; ++i) {
      T cand = best[i] + square(values[j] - values[i]);
      if (cand > b) b = std::move(cand);
    }
    if (b > overall) overall = b;
    best[j] = std::move(b);
  }
  return overall;
}

template <ScalarType T>
BasicVector<T> iso_T(const BasicVector<T>& x) {
  if (x.is_zero_vector()) return {};
  std::vector<T> out(static_cast<std::size_t>(x.max_index()), T(0));
  T tail(0);
  for (Index n = x.max_index(); n >= 1; --n) {
    tail += x(n);
    out[static_cast<std::size_t>(n - 1)] = tail;
  }
  return BasicVector<T>::dense(std::move(out));
}

template <ScalarType T>
BasicVector<T> iso_T_inv(const BasicVector<T>& y) {
  if (y.is_zero_vector()) return {};
  std::vector<typename BasicVector<T>::Entry> out;
  for (Index n = 1; n <= y.max_index(); ++n) out.push_back({n, y(n) - y(n + 1)});
  return BasicVector<T>::from_entries(std::move(out));
}

std::size_t bruteforce_cap_from_env() {
  const char* raw = std::getenv("JAMESKIT_BRUTEFORCE_CAP");
  if (raw == nullptr || *raw == '\0') return kBruteForceCap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1) {
    throw ValidationError(std::string("JAMESKIT_BRUTEFORCE_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

#define JAMESKIT_INSTANTIATE(T)                                                      \
  template NormCertificate<T> james_norm_sq<T>(const BasicVector<T>&);               \
  template T james_norm_bruteforce_sq<T>(const BasicVector<T>&, std::size_t);        \
  template T l2_norm_sq<T>(const BasicVector<T>&);                                   \
  template T s_norm_sq<T>(const BasicVector<T>&);                                    \
  template T s_norm_sq_direct<T>(const BasicVector<T>&);                             \
  template BasicVector<T> iso_T<T>(const BasicVector<T>&);                           \
  template BasicVector<T> iso_T_inv<T>(const BasicVector<T>&);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
