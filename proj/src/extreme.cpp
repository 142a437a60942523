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

#include "jameskit/extreme.hpp"

#include "jameskit/errors.hpp"
#include "jameskit/partition.hpp"

namespace jameskit {
namespace {

template <ScalarType T>
bool npr_holds(const T& sum, const T& sum_sq, double tol) {
  return leq(square(sum), sum_sq, tol);
}

}  // namespace

template <ScalarType T>
bool is_npr(const BasicVector<T>& x, double tol) {
  T sum(0);
  T sum_sq(0);
  for (const auto& e : x.entries()) {
    sum += e.value;
    sum_sq += square(e.value);
  }
  return npr_holds(sum, sum_sq, tol);
}

template <ScalarType T>
NprScan is_npr_hereditary(const BasicVector<T>& x, double tol) {
  NprScan scan;
  if (x.is_zero_vector()) return scan;
  const Index first = x.min_index();
  const Index last = x.max_index();
  for (Index lo = first; lo <= last; ++lo) {
    T sum(0);
    T sum_sq(0);
    for (Index hi = lo; hi <= last; ++hi) {
      const T v = x(hi);
      sum += v;
      sum_sq += square(v);
      if (!npr_holds(sum, sum_sq, tol)) {
        scan.hereditary = false;
        scan.violator = Interval::finite(lo, hi);
        return scan;
      }
    }
  }
  return scan;
}

ExtremeCertificateJ is_extreme_BJ(const ExactVector& x) {
  ExtremeCertificateJ cert;
  cert.james_sq = james_norm_sq(x).norm_sq;
  cert.l2_sq = l2_norm_sq(x);
  cert.verdict = cert.james_sq == cert.l2_sq && cert.l2_sq == Rational(1);
  cert.failing_interval = is_npr_hereditary(x).violator;
  return cert;
}

template <ScalarType T>
bool is_extreme_direction(const BasicVector<T>& x, double tol) {
  if (x.is_zero_vector()) return false;
  return near(james_norm_sq(x).norm_sq, l2_norm_sq(x), tol);
}

template <ScalarType T>
BasicVector<T> extreme_from_family(const BasicVector<T>& x, const IntervalFamily& fam,
                                   const std::vector<Index>& positions, double tol) {
  if (positions.size() != fam.size()) {
    throw ValidationError("extreme_from_family: " + std::to_string(positions.size()) + " positions for " +
                          std::to_string(fam.size()) + " intervals");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || (i > 0 && positions[i] <= positions[i - 1])) {
      throw ValidationError("extreme_from_family: positions must be strictly increasing and >= 1");
    }
  }
  if (x.is_zero_vector() || !is_norming_family(x, fam, tol)) {
    throw ValidationError("extreme_from_family: family " + fam.to_string() + " does not norm x");
  }
  std::vector<typename BasicVector<T>::Entry> out;
  for (std::size_t i = 0; i < fam.size(); ++i) out.push_back({positions[i], interval_sum(x, fam[i])});
  auto result = BasicVector<T>::from_entries(std::move(out));
  if (!is_extreme_direction(result, tol)) throw InternalError("extreme_from_family produced a non-extreme direction");
  return result;
}

bool is_extreme_BJs(const ExactVector& y) {
  const auto x = iso_T_inv(y);
  return is_npr_hereditary(x).hereditary && l2_norm_sq(x) == Rational(1);
}

template <ScalarType T>
bool is_extreme_direction_Js(const BasicVector<T>& y, double tol) {
  return is_extreme_direction(iso_T_inv(y), tol);
}

#define JAMESKIT_INSTANTIATE(T)                                                                  \
  template bool is_npr<T>(const BasicVector<T>&, double);                                        \
  template NprScan is_npr_hereditary<T>(const BasicVector<T>&, double);                          \
  template bool is_extreme_direction<T>(const BasicVector<T>&, double);                          \
  template BasicVector<T> extreme_from_family<T>(const BasicVector<T>&, const IntervalFamily&,   \
                                                 const std::vector<Index>&, double);             \
  template bool is_extreme_direction_Js<T>(const BasicVector<T>&, double);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
