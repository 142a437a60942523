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

// Scalar modes. Every container in the library is templated on its scalar
// type, so one vector or functional can never mix modes; the runtime mode
// tag only exists at the serialization boundary.

#ifndef JAMESKIT_SCALAR_HPP
#define JAMESKIT_SCALAR_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <string_view>
#include <type_traits>

#include "jameskit/rational.hpp"

namespace jameskit {

/// 1-based coordinate index into a sequence space.
using Index = std::int64_t;

enum class Mode { kExact, kFloat };

constexpr std::string_view mode_name(Mode m) { return m == Mode::kExact ? "exact" : "float"; }

/// Relative tolerance used for every float-mode comparison unless a caller
/// passes its own.
inline constexpr double kDefaultTolerance = 1e-9;

template <class T>
concept ScalarType = std::same_as<T, Rational> || std::same_as<T, double>;

template <ScalarType T>
constexpr Mode mode_of() {
  return std::is_same_v<T, Rational> ? Mode::kExact : Mode::kFloat;
}

inline int sign(const Rational& x) { return x.sign(); }
inline int sign(double x) { return (x > 0.0) - (x < 0.0); }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

/// a == b: exact for rationals, relative tolerance for doubles.
inline bool near(const Rational& a, const Rational& b, double /*tol*/ = kDefaultTolerance) { return a == b; }
inline bool near(double a, double b, double tol = kDefaultTolerance) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) <= tol * scale;
}

/// a <= b, with the same tolerance rule as near().
inline bool leq(const Rational& a, const Rational& b, double /*tol*/ = kDefaultTolerance) { return a <= b; }
inline bool leq(double a, double b, double tol = kDefaultTolerance) { return a <= b || near(a, b, tol); }

/// a < b strictly, i.e. a <= b and not near(a, b).
template <ScalarType T>
bool strictly_less(const T& a, const T& b, double tol = kDefaultTolerance) {
  return a < b && !near(a, b, tol);
}

template <ScalarType T>
T square(const T& x) {
  return x * x;
}

template <ScalarType T>
T scalar_from_double(double v);

template <>
inline double scalar_from_double<double>(double v) {
  return v;
}

template <>
inline Rational scalar_from_double<Rational>(double v) {
  return Rational(mpq_class(v));
}

}  // namespace jameskit

#endif  // JAMESKIT_SCALAR_HPP
