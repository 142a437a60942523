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

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "jameskit/errors.hpp"
#include "jameskit/extreme.hpp"
#include "jameskit/partition.hpp"
#include "jameskit/random.hpp"

namespace jameskit {
namespace {

using testing_helpers::fv;
using testing_helpers::q;
using testing_helpers::xv;

TEST(ExtremeBJTest, Examples) {
  const auto a = is_extreme_BJ(xv({q(2, 3), q(-1, 3), q(2, 3)}));
  EXPECT_TRUE(a.verdict);
  EXPECT_EQ(a.james_sq, q(1));
  EXPECT_EQ(a.l2_sq, q(1));
  EXPECT_FALSE(a.failing_interval.has_value());

  EXPECT_TRUE(is_extreme_BJ(ExactVector::unit(7)).verdict);

  const auto c = is_extreme_BJ(xv({q(7, 10), q(7, 10)}));
  EXPECT_FALSE(c.verdict);
  EXPECT_EQ(c.james_sq, q(49, 25));
  EXPECT_EQ(c.l2_sq, q(49, 50));
  EXPECT_EQ(c.failing_interval, Interval::finite(1, 2));
}

TEST(ExtremeBJTest, ExtremeDirectionScaledOffTheSphereIsNotExtreme) {
  const auto cert = is_extreme_BJ(xv({q(2), q(-1), q(2)}));
  EXPECT_FALSE(cert.verdict);
  EXPECT_EQ(cert.james_sq, cert.l2_sq);
  EXPECT_FALSE(cert.failing_interval.has_value());
}

TEST(ExtremeDirectionTest, Examples) {
  EXPECT_TRUE(is_extreme_direction(xv({q(2), q(-1), q(2)})));
  EXPECT_FALSE(is_extreme_direction(xv({q(1), q(1)})));
  EXPECT_TRUE(is_extreme_direction(xv({q(1), q(-1)})));
  EXPECT_FALSE(is_extreme_direction(ExactVector{}));
  EXPECT_TRUE(is_extreme_direction(fv({0.6, -0.8})));
  EXPECT_FALSE(is_extreme_direction(fv({0.6, 0.8})));
}

TEST(NprTest, Examples) {
  EXPECT_FALSE(is_npr(xv({q(1), q(1)})));
  const auto a = is_npr_hereditary(xv({q(2), q(-1), q(2)}));
  EXPECT_TRUE(a.hereditary);
  EXPECT_FALSE(a.violator.has_value());
  const auto b = is_npr_hereditary(xv({q(1), q(-1), q(1), q(1)}));
  EXPECT_FALSE(b.hereditary);
  EXPECT_EQ(b.violator, Interval::finite(3, 4));
}

TEST(ExtremeFromFamilyTest, Examples) {
  const auto x = xv({q(2, 3), q(-1, 3), q(2, 3)});
  const IntervalFamily singletons{Interval::point(1), Interval::point(2), Interval::point(3)};
  const auto spread = extreme_from_family(x, singletons, {2, 5, 9});
  EXPECT_EQ(spread, ExactVector::from_entries({{2, q(2, 3)}, {5, q(-1, 3)}, {9, q(2, 3)}}));
  EXPECT_TRUE(is_extreme_BJ(spread).verdict);

  const auto whole = extreme_from_family(x, IntervalFamily{Interval::finite(1, 3)}, {1});
  EXPECT_EQ(whole, ExactVector::unit(1));
  EXPECT_TRUE(is_extreme_BJ(whole).verdict);

  EXPECT_EQ(extreme_from_family(ExactVector::unit(1), IntervalFamily{Interval::point(1)}, {4}), ExactVector::unit(4));
}

TEST(ExtremeFromFamilyTest, Errors) {
  const auto x = xv({q(2, 3), q(-1, 3), q(2, 3)});
  const IntervalFamily whole{Interval::finite(1, 3)};
  EXPECT_THROW(extreme_from_family(x, whole, {1, 2}), ValidationError);
  EXPECT_THROW(extreme_from_family(x, IntervalFamily{Interval::finite(1, 2), Interval::point(3)}, {1, 2}),
               ValidationError);
  EXPECT_THROW(extreme_from_family(x, IntervalFamily{Interval::point(1), Interval::finite(2, 3)}, {3, 3}),
               ValidationError);
}

TEST(ExtremeBJsTest, Examples) {
  EXPECT_TRUE(is_extreme_BJs(iso_T(xv({q(2, 3), q(-1, 3), q(2, 3)}))));
  // ||T(1,1)||_s = ||(1,1)||_J = 2.
  EXPECT_FALSE(is_extreme_BJs(iso_T(xv({q(1, 2), q(1, 2)}))));
  EXPECT_TRUE(is_extreme_BJs(iso_T(ExactVector::unit(1))));
  EXPECT_EQ(iso_T(ExactVector::unit(1)), ExactVector::unit(1));
  EXPECT_TRUE(is_extreme_direction_Js(xv({q(2), q(0), q(2)})));
}

TEST(ExtremeProperty, CriteriaAgreeAndSignsAlternate) {
  std::size_t extreme_seen = 0;
  for (std::uint64_t t = 0; t < 600; ++t) {
    auto rng = trial_stream(41, 0, t);
    const auto x = random_nonzero_exact_vector(rng, 8);
    const bool direction = is_extreme_direction(x);
    const bool npr = is_npr_hereditary(x).hereditary && james_norm_sq(x).norm_sq == l2_norm_sq(x);
    const auto finest = finest_partition(x);
    const bool singletons =
        std::all_of(finest.begin(), finest.end(), [](const Interval& iv) { return iv.lo() == iv.hi(); });
    EXPECT_EQ(direction, npr);
    EXPECT_EQ(direction, singletons);
    // NPR hereditarily alone already decides the direction.
    EXPECT_EQ(direction, is_npr_hereditary(x).hereditary);
    if (!direction) continue;
    ++extreme_seen;
    const auto e = x.entries();
    for (std::size_t i = 0; i + 1 < e.size(); ++i) EXPECT_LT(sign(e[i].value) * sign(e[i + 1].value), 0);
    for (Index lo = x.min_index(); lo <= x.max_index(); ++lo) {
      for (Index hi = lo; hi <= x.max_index(); ++hi) {
        const auto r = x.restricted(lo, hi);
        EXPECT_EQ(james_norm_sq(r).norm_sq, l2_norm_sq(r));
      }
    }
  }
  EXPECT_GT(extreme_seen, 20U);
}

TEST(ExtremeProperty, VerdictStableUnderExactRescaling) {
  // Extreme directions with rational l2 norm: rescaling to the sphere gives
  // an extreme point, rescaling off it does not.
  const std::vector<std::pair<ExactVector, Rational>> cases{
      {xv({q(2), q(-1), q(2)}), q(3)}, {xv({q(3), q(-4)}), q(5)}, {xv({q(2), q(-3), q(6)}), q(7)}};
  for (const auto& [x, l2] : cases) {
    EXPECT_TRUE(is_extreme_BJ(x.scaled(q(1) / l2)).verdict);
    EXPECT_FALSE(is_extreme_BJ(x.scaled(q(1) / (l2 + q(1)))).verdict);
  }
}

TEST(ExtremeProperty, BlockSumsOfNormingFamiliesAreExtreme) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_stream(42, 0, t);
    const auto x = random_nonzero_exact_vector(rng, 8);
    for (const auto& p : enumerate_norming_partitions(x).partitions) {
      std::vector<Index> positions;
      Index pos = 0;
      for (std::size_t i = 0; i < p.size(); ++i) positions.push_back(pos += rng.between(1, 3));
      const auto b = extreme_from_family(x, p, positions);
      EXPECT_TRUE(is_extreme_direction(b));
      EXPECT_EQ(l2_norm_sq(b), james_norm_sq(x).norm_sq);
    }
  }
}

TEST(ExtremeProperty, JsCriterionTransportsThroughT) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = trial_stream(43, 0, t);
    const auto x = random_nonzero_exact_vector(rng, 8);
    EXPECT_EQ(is_extreme_direction_Js(iso_T(x)), is_extreme_direction(x));
    EXPECT_EQ(is_extreme_BJs(iso_T(x)), is_extreme_BJ(x).verdict);
  }
}

}  // namespace
}  // namespace jameskit
