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

#include "jameskit/dual.hpp"

#include <algorithm>
#include <cmath>

#include "jameskit/errors.hpp"

namespace jameskit {
namespace {

template <ScalarType T>
bool has_valid_shape(const DualFunctional<T>& f) {
  std::vector<Interval> intervals;
  for (const auto& t : f.terms) {
    if (t.interval.kind() == Interval::Kind::kOmegaSingleton) return false;
    intervals.push_back(t.interval);
  }
  return IntervalFamily::is_valid(intervals);
}

template <ScalarType T>
void require_shape(const DualFunctional<T>& f, const char* op) {
  if (!has_valid_shape(f)) {
    throw ValidationError(std::string(op) + ": intervals must be increasing and disjoint with only the last one a tail");
  }
}

template <ScalarType T>
void require_D1(const DualFunctional<T>& f, double tol, const char* op) {
  if (!validate_D1(f, tol)) throw ValidationError(std::string(op) + ": functional is not in D1");
}

template <ScalarType T>
T coefficient_l2_sq(const DualFunctional<T>& f) {
  T total(0);
  for (const auto& t : f.terms) total += square(t.alpha);
  return total;
}

template <ScalarType T>
bool has_zero_coefficient(const DualFunctional<T>& f) {
  return std::any_of(f.terms.begin(), f.terms.end(), [](const DualTerm<T>& t) { return is_zero(t.alpha); });
}

template <ScalarType T>
T term_sum(const Interval& iv, const BasicVector<T>& x) {
  switch (iv.kind()) {
    case Interval::Kind::kFinite:
      return interval_sum(x, iv);
    case Interval::Kind::kTailOmega: {
      T sum(0);
      for (const auto& e : x.entries()) {
        if (e.index >= iv.lo()) sum += e.value;
      }
      return sum;
    }
    case Interval::Kind::kOmegaSingleton:
      break;
  }
  throw ValidationError("functional term on {w} cannot act on J");
}

}  // namespace

template <ScalarType T>
T eval_dual(const DualFunctional<T>& f, const BasicVector<T>& x) {
  T total(0);
  for (const auto& t : f.terms) total += t.alpha * term_sum(t.interval, x);
  return total;
}

template <ScalarType T>
bool validate_D1(const DualFunctional<T>& f, double tol) {
  return has_valid_shape(f) && leq(coefficient_l2_sq(f), T(1), tol);
}

template <ScalarType T>
BasicVector<T> coefficient_vector(const DualFunctional<T>& f) {
  std::vector<T> coefs;
  for (const auto& t : f.terms) coefs.push_back(t.alpha);
  return BasicVector<T>::dense(std::move(coefs));
}

template <ScalarType T>
bool is_norm_one_D1(const DualFunctional<T>& f, double tol) {
  require_D1(f, tol, "is_norm_one_D1");
  const auto w = coefficient_vector(f);
  return near(james_norm_sq(w).norm_sq, T(1), tol) && near(l2_norm_sq(w), T(1), tol);
}

template <ScalarType T>
DualExtremeVerdict is_extreme_BJstar(const DualFunctional<T>& f, double tol) {
  require_D1(f, tol, "is_extreme_BJstar");
  if (has_zero_coefficient(f)) return {false, kReasonZeroCoefficient};
  if (!is_norm_one_D1(f, tol)) return {false, kReasonCoefficientsNotExtreme};
  const auto gaps = gap_profile(f);
  if (std::any_of(gaps.begin(), gaps.end(), [](Index g) { return g > 0; })) return {false, kReasonUnionNotInterval};
  return {true, ""};
}

template <ScalarType T>
std::vector<Index> gap_profile(const DualFunctional<T>& f) {
  require_shape(f, "gap_profile");
  std::vector<Index> gaps;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    if (i + 1 == f.terms.size()) {
      gaps.push_back(0);
    } else {
      gaps.push_back(f.terms[i + 1].interval.lo() - f.terms[i].interval.hi() - 1);
    }
  }
  return gaps;
}

template <ScalarType T>
bool in_closure_of_extremes(const DualFunctional<T>& f, double tol) {
  if (!is_norm_one_D1(f, tol)) throw ValidationError("in_closure_of_extremes: functional is not of norm one");
  if (has_zero_coefficient(f)) throw ValidationError("in_closure_of_extremes: zero coefficients are not allowed");
  const auto gaps = gap_profile(f);
  return std::none_of(gaps.begin(), gaps.end(), [](Index g) { return g == 1; });
}

template <ScalarType T>
ApproxStep approx_extreme_sequence(const DualFunctional<T>& f, Index m, double tol) {
  if (m < 1) throw ValidationError("approx_extreme_sequence: m must be >= 1");
  if (!in_closure_of_extremes(f, tol)) {
    throw ValidationError("approx_extreme_sequence: a gap of length 1 admits no extreme approximation");
  }
  const auto base = convert_functional<double>(f);
  const auto gaps = gap_profile(f);
  const auto gap_count = std::count_if(gaps.begin(), gaps.end(), [](Index g) { return g > 0; });
  if (gap_count == 0) return {base, 0.0};

  const double beta = 1.0 / (2.0 * static_cast<double>(m) * std::sqrt(2.0 * static_cast<double>(gap_count)));
  FloatFunctional y;
  for (std::size_t i = 0; i < base.terms.size(); ++i) {
    const auto& term = base.terms[i];
    y.terms.push_back(term);
    if (gaps[i] == 0) continue;
    const double s = static_cast<double>(sign(term.alpha));
    const Index first = term.interval.hi() + 1;
    const Index split = first + gaps[i] / 2;
    const Index last = base.terms[i + 1].interval.lo() - 1;
    y.terms.push_back({Interval::finite(first, split - 1), -s * beta});
    y.terms.push_back({Interval::finite(split, last), s * beta});
  }

  const double nu = std::sqrt(coefficient_l2_sq(y));
  if (!is_extreme_direction(coefficient_vector(y), tol)) {
    throw InternalError("approx_extreme_sequence: perturbed coefficients are not an extreme direction");
  }
  double dist_sq = 0.0;
  for (auto& t : y.terms) {
    t.alpha /= nu;
  }
  for (const auto& t : base.terms) dist_sq += square(t.alpha * (1.0 / nu - 1.0));
  dist_sq += 2.0 * static_cast<double>(gap_count) * square(beta / nu);

  if (!is_extreme_BJstar(y, tol).extreme) {
    throw InternalError("approx_extreme_sequence: result is not extreme");
  }
  return {std::move(y), std::sqrt(dist_sq)};
}

template <ScalarType T>
DualNormBounds<T> dual_norm_bounds(const DualFunctional<T>& f, double /*tol*/) {
  require_shape(f, "dual_norm_bounds");
  const T upper = coefficient_l2_sq(f);
  if (is_zero(upper)) return {T(0), T(0)};
  T lower = square(upper) / james_norm_sq(coefficient_vector(f)).norm_sq;
  for (const auto& t : f.terms) {
    T single = square(t.alpha);
    if (single > lower) lower = std::move(single);
  }
  return {std::move(lower), upper};
}

template <ScalarType T>
Decomposition<T> decompose_non_extreme(const DualFunctional<T>& f, double tol) {
  require_D1(f, tol, "decompose_non_extreme");
  DualFunctional<T> base;
  for (const auto& t : f.terms) {
    if (!is_zero(t.alpha)) base.terms.push_back(t);
  }
  const auto gaps = gap_profile(base);
  const auto it = std::find_if(gaps.begin(), gaps.end(), [](Index g) { return g > 0; });
  if (it == gaps.end()) throw ValidationError("decompose_non_extreme: the intervals cover an interval of N");
  const auto k = static_cast<std::size_t>(it - gaps.begin());
  const auto& left = base.terms[k];
  const auto& right = base.terms[k + 1];
  if (sign(left.alpha) == sign(right.alpha)) {
    throw ValidationError("decompose_non_extreme: coefficients around the gap share a sign");
  }

  Decomposition<T> out{base, base, T(0)};
  out.y.terms[k].interval = Interval::finite(left.interval.lo(), right.interval.lo() - 1);
  out.z.terms[k + 1].interval = right.interval.is_finite()
                                    ? Interval::finite(left.interval.hi() + 1, right.interval.hi())
                                    : Interval::tail_omega(left.interval.hi() + 1);
  out.lambda = right.alpha / (right.alpha - left.alpha);
  return out;
}

#define JAMESKIT_INSTANTIATE(T)                                                                        \
  template T eval_dual<T>(const DualFunctional<T>&, const BasicVector<T>&);                            \
  template bool validate_D1<T>(const DualFunctional<T>&, double);                                      \
  template BasicVector<T> coefficient_vector<T>(const DualFunctional<T>&);                             \
  template bool is_norm_one_D1<T>(const DualFunctional<T>&, double);                                   \
  template DualExtremeVerdict is_extreme_BJstar<T>(const DualFunctional<T>&, double);                  \
  template std::vector<Index> gap_profile<T>(const DualFunctional<T>&);                                \
  template bool in_closure_of_extremes<T>(const DualFunctional<T>&, double);                           \
  template ApproxStep approx_extreme_sequence<T>(const DualFunctional<T>&, Index, double);             \
  template DualNormBounds<T> dual_norm_bounds<T>(const DualFunctional<T>&, double);                    \
  template Decomposition<T> decompose_non_extreme<T>(const DualFunctional<T>&, double);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
