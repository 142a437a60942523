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

#include "jameskit/constructions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jameskit/errors.hpp"

namespace jameskit {
namespace {

constexpr double kIdentityTolerance = 1e-12;
constexpr double kDefaultBlockA1 = 0.8;

}  // namespace

double e_set_residual(const ESetPoint& p) {
  const double sum = p.a1 + p.a2 + p.a3;
  const double sum_sq = p.a1 * p.a1 + p.a2 * p.a2 + p.a3 * p.a3;
  return std::max(std::abs(sum - 1.0), std::abs(sum_sq - 1.0));
}

ESetPoint e_set_point(double a1) {
  if (!(a1 > 0.0 && a1 < 1.0)) throw ValidationError("e_set_point: a1 must lie in (0,1), got " + std::to_string(a1));
  // a2 + a3 = s and a2^2 + a3^2 = q, so a2, a3 = (s -+ sqrt(2q - s^2)) / 2,
  // where 2q - s^2 = (1 - a1)(1 + 3 a1).
  const double s = 1.0 - a1;
  const double d = std::sqrt((1.0 - a1) * (1.0 + 3.0 * a1));
  return {a1, (s - d) / 2.0, (s + d) / 2.0};
}

std::vector<double> prop65_sequence(const std::vector<double>& r) {
  if (r.empty()) throw ValidationError("prop65_sequence: r is empty");
  if (r.front() < 1.0 / std::sqrt(2.0) - kIdentityTolerance) {
    throw ValidationError("prop65_sequence: r_1 must be at least 1/sqrt(2)");
  }
  if (std::abs(r.back() - 1.0) > kIdentityTolerance) throw ValidationError("prop65_sequence: last radius must be 1");
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (!(r[i] > r[i - 1])) throw ValidationError("prop65_sequence: r must be strictly increasing");
  }
  std::vector<double> a{r.front()};
  for (std::size_t m = 0; m + 1 < r.size(); ++m) {
    const auto p = e_set_point(r[m] / r[m + 1]);
    a.push_back(p.a2 * r[m + 1]);
    a.push_back(p.a3 * r[m + 1]);
  }
  return a;
}

Prop65Report check_prop65(const std::vector<double>& r, const std::vector<double>& a) {
  if (a.size() != 2 * r.size() - 1) throw ValidationError("check_prop65: expected 2k - 1 coefficients");
  Prop65Report report;
  report.identity_residual = std::abs(a.front() - r.front());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    sum += a[j];
    sum_sq += a[j] * a[j];
    // 1-based j + 1 odd and > 1 closes a block of the first m + 1 radii.
    if (j > 0 && j % 2 == 0) {
      const double target = r[j / 2];
      report.identity_residual = std::max(
          {report.identity_residual, std::abs(sum - target), std::abs(sum_sq - target * target)});
    }
  }
  report.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t lo = 1; lo <= a.size(); ++lo) {
    double s = 0.0;
    double sq = 0.0;
    for (std::size_t hi = lo; hi <= a.size(); ++hi) {
      s += a[hi - 1];
      sq += a[hi - 1] * a[hi - 1];
      if (hi == lo || (lo == 1 && hi % 2 == 1)) continue;
      report.min_margin = std::min(report.min_margin, sq - s * s);
      ++report.intervals_checked;
    }
  }
  return report;
}

FloatVector multi_partition_vector(Index k) {
  if (k < 1) throw ValidationError("multi_partition_vector: k must be >= 1");
  if (k == 1) return FloatVector::unit(1);
  std::vector<double> r;
  for (Index i = 1; i <= k; ++i) {
    r.push_back(std::sqrt(0.5 + static_cast<double>(i - 1) / (2.0 * static_cast<double>(k - 1))));
  }
  r.back() = 1.0;
  return FloatVector::dense(prop65_sequence(r));
}

FloatVector block_product_vector(Index blocks, const ESetPoint& p) {
  if (blocks < 1) throw ValidationError("block_product_vector: B must be >= 1");
  if (!(p.a1 > 0.0 && p.a3 > 0.0 && p.a2 < 0.0) || e_set_residual(p) > kIdentityTolerance) {
    throw ValidationError("block_product_vector: p is not an E-set point");
  }
  std::vector<double> coefs;
  double weight = 1.0;
  for (Index n = 1; n <= blocks; ++n) {
    weight /= 2.0;
    for (double v : {p.a1, p.a2, p.a3, -p.a3, -p.a2, -p.a1}) coefs.push_back(weight * v);
  }
  return FloatVector::dense(std::move(coefs));
}

FloatVector block_product_vector(Index blocks) { return block_product_vector(blocks, e_set_point(kDefaultBlockA1)); }

}  // namespace jameskit
