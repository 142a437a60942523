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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are pinned here and never loosened.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "jameskit/bidual.hpp"
#include "jameskit/constructions.hpp"
#include "jameskit/dual.hpp"
#include "jameskit/extreme.hpp"
#include "jameskit/partition.hpp"
#include "jameskit/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

namespace jameskit {
namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr double kFloatTol = 1e-9;
constexpr double kMarginFactor = 100.0;
constexpr double kESetResidual = 1e-12;
constexpr double kProp65Residual = 1e-10;
constexpr double kProp65Margin = 1e-10;
constexpr double kApproxBoundAt100 = 1e-2;
constexpr double kOracleSeconds = 30.0;

struct Result {
  bool pass = true;
  std::string detail;
};

/// Vector with a bounding box of at most max_box, starting at a random
/// offset; zeros may appear inside the box.
ExactVector boxed_vector(SplitMix64& rng, Index max_box) {
  for (;;) {
    const Index offset = rng.between(0, 4);
    const Index box = rng.between(1, max_box);
    std::vector<ExactVector::Entry> entries;
    for (Index i = 1; i <= box; ++i) entries.push_back({offset + i, random_coefficient(rng)});
    auto x = ExactVector::from_entries(std::move(entries));
    if (!x.is_zero_vector()) return x;
  }
}

std::vector<ExactVector> vectors(std::uint64_t suite, std::size_t count, Index max_box) {
  std::vector<ExactVector> out;
  for (std::size_t t = 0; t < count; ++t) {
    auto rng = trial_stream(kSeed, suite, t);
    out.push_back(boxed_vector(rng, max_box));
  }
  return out;
}

/// Half uniform random coefficients, half tie-rich vectors, so that many
/// vectors have several norming partitions to compare.
std::vector<ExactVector> mixed_vectors(std::uint64_t suite, std::size_t count, Index max_box) {
  std::vector<ExactVector> out;
  for (std::size_t t = 0; t < count; ++t) {
    auto rng = trial_stream(kSeed, suite, t);
    out.push_back(t % 2 == 0 ? boxed_vector(rng, max_box) : testing_helpers::tie_rich_vector(rng, max_box));
  }
  return out;
}

std::string show(const ExactVector& x) {
  std::ostringstream os;
  os << "{";
  for (const auto& e : x.entries()) os << " " << e.index << ":" << e.value.to_string();
  os << " }";
  return os.str();
}

Result criterion_1(const std::vector<ExactVector>& xs) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& x : xs) {
    const auto dp = james_norm_sq(x).norm_sq;
    if (dp != oracle::james_sq(x) || dp != james_norm_bruteforce_sq(x, 10)) {
      if (mismatches++ == 0) first = show(x);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Result r;
  r.pass = mismatches == 0 && seconds < kOracleSeconds;
  r.detail = std::to_string(xs.size()) + " vectors, box <= 10, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(seconds) + " s (limit 30 s)";
  if (!first.empty()) r.detail += ", first " + first;
  return r;
}

Result criterion_2(const std::vector<ExactVector>& xs) {
  std::size_t disagreements = 0;
  std::size_t extreme = 0;
  for (const auto& x : xs) {
    const bool direction = is_extreme_direction(x);
    const bool npr = is_npr_hereditary(x).hereditary && james_norm_sq(x).norm_sq == l2_norm_sq(x);
    const auto finest = finest_partition(x);
    const bool singletons =
        std::all_of(finest.begin(), finest.end(), [](const Interval& iv) { return iv.lo() == iv.hi(); });
    if (direction != npr || direction != singletons) ++disagreements;
    if (direction) ++extreme;
  }
  return {disagreements == 0 && extreme > 0,
          std::to_string(xs.size()) + " vectors (" + std::to_string(extreme) + " extreme directions), " +
              std::to_string(disagreements) + " disagreements"};
}

bool nested_or_disjoint(const Interval& a, const Interval& b) {
  return !a.intersects(b) || a.contains(b) || b.contains(a);
}

Result criteria_3_and_4(const std::vector<ExactVector>& xs, Result& structure) {
  std::size_t violations = 0;
  std::size_t structure_violations = 0;
  std::size_t partitions = 0;
  std::size_t pairs = 0;
  std::size_t several = 0;
  std::string first;
  for (const auto& x : xs) {
    const auto found = enumerate_norming_partitions(x);
    const auto& ps = found.partitions;
    const auto expected = oracle::norming_partitions(x);
    const auto finest = finest_partition(x);
    bool bad = found.truncated || ps != expected;
    if (ps.size() > 1) ++several;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      ++partitions;
      if (!check_structure(x, ps[i]).all()) ++structure_violations;
      if (!refines(x, finest, ps[i])) bad = true;
      for (std::size_t j = i; j < ps.size(); ++j) {
        ++pairs;
        for (const auto& a : ps[i]) {
          for (const auto& b : ps[j]) bad = bad || !nested_or_disjoint(a, b);
        }
        const auto joint = joint_refinement(x, ps[i], ps[j]);
        bad = bad || !is_norming_partition(x, joint) || !refines(x, joint, ps[i]) || !refines(x, joint, ps[j]);
      }
    }
    if (bad && violations++ == 0) first = show(x);
  }
  structure = {structure_violations == 0 && partitions > 0,
               std::to_string(partitions) + " enumerated partitions, " + std::to_string(structure_violations) +
                   " violations"};
  Result r{violations == 0,
           std::to_string(xs.size()) + " vectors, box <= 8, " + std::to_string(several) + " with several norming partitions, " +
               std::to_string(partitions) + " partitions, " + std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violating vectors"};
  if (!first.empty()) r.detail += ", first " + first;
  return r;
}

Result criterion_5() {
  Result r;
  std::ostringstream os;
  for (Index k = 1; k <= 6; ++k) {
    const auto x = multi_partition_vector(k);
    const auto count = count_norming_partitions(x, kFloatTol);
    const auto margin = optimality_margin(x, kFloatTol);
    const bool count_ok = count == BigInt(k);
    // A single support point leaves no non-optimal block to compare with.
    const bool margin_ok = k == 1 ? !margin.has_value() : margin.has_value() && *margin >= kMarginFactor * kFloatTol;
    r.pass = r.pass && count_ok && margin_ok;
    os << "k=" << k << ": " << count.get_str() << " (margin ";
    if (margin) {
      os << *margin;
    } else {
      os << "n/a";
    }
    os << ") ";
  }
  for (Index b = 1; b <= 2; ++b) {
    const auto found = enumerate_norming_partitions(block_product_vector(b), kDefaultEnumerationLimit, kFloatTol);
    const std::size_t expected = b == 1 ? 4 : 16;
    r.pass = r.pass && !found.truncated && found.partitions.size() == expected;
    os << "B=" << b << ": " << found.partitions.size() << " ";
  }
  r.detail = os.str();
  return r;
}

FloatFunctional gapped_pair() {
  const double a = 1.0 / std::sqrt(2.0);
  return {{{Interval::point(1), a}, {Interval::point(4), -a}}};
}

Result criterion_6() {
  const auto f = gapped_pair();
  const auto verdict = is_extreme_BJstar(f, kFloatTol);
  bool pass = !verdict.extreme && verdict.reason == kReasonUnionNotInterval;
  std::size_t extreme_steps = 0;
  for (Index m = 1; m <= 10; ++m) {
    if (is_extreme_BJstar(approx_extreme_sequence(f, m, kFloatTol).functional, kFloatTol).extreme) ++extreme_steps;
  }
  pass = pass && extreme_steps == 10;
  bool decreasing = true;
  double previous = INFINITY;
  for (Index m = 1; m <= 100; ++m) {
    const double bound = approx_extreme_sequence(f, m, kFloatTol).distance_bound;
    decreasing = decreasing && bound < previous;
    previous = bound;
  }
  pass = pass && decreasing && previous < kApproxBoundAt100;
  std::ostringstream os;
  os << "x* reason '" << verdict.reason << "', " << extreme_steps << "/10 approximants extreme, bound at m=100 "
     << previous << (decreasing ? ", strictly decreasing" : ", NOT decreasing");
  return {pass, os.str()};
}

template <ScalarType T>
bool closure_case_passes(const DualFunctional<T>& f, const std::vector<Index>& gaps) {
  if (gap_profile(f) != gaps || !in_closure_of_extremes(f, kFloatTol)) return false;
  for (Index m = 1; m <= 10; ++m) {
    if (!is_extreme_BJstar(approx_extreme_sequence(f, m, kFloatTol).functional, kFloatTol).extreme) return false;
  }
  return true;
}

Result criterion_7() {
  const bool float_case = closure_case_passes(gapped_pair(), {2, 0});
  const ExactFunctional exact{{{Interval::point(1), Rational(3, 5)}, {Interval::point(4), Rational(-4, 5)}}};
  const bool exact_case = closure_case_passes(exact, {2, 0});

  const double a = 1.0 / std::sqrt(2.0);
  const FloatFunctional one_gap{{{Interval::point(1), a}, {Interval::point(3), -a}}};
  const ExactFunctional one_gap_exact{{{Interval::point(1), Rational(3, 5)}, {Interval::point(3), Rational(-4, 5)}}};
  const bool rejected = gap_profile(one_gap) == std::vector<Index>{1, 0} && !in_closure_of_extremes(one_gap, kFloatTol) &&
                        !in_closure_of_extremes(one_gap_exact);
  std::string detail = std::string("gaps (2,0): ") + (float_case && exact_case ? "in closure" : "FAILED") +
                       ", approximants extreme for m=1..10; gaps (1,0): " + (rejected ? "rejected" : "NOT rejected");
  return {float_case && exact_case && rejected, detail};
}

Result criterion_8() {
  std::size_t failures = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = trial_stream(kSeed, 8, t);
    const auto x = random_exact_vector(rng, 12);
    const auto y = iso_T(x);
    const auto j = james_norm_sq(x).norm_sq;
    if (s_norm_sq(y) != j || s_norm_sq_direct(y) != j) ++failures;
    if (iso_T(iso_T_inv(y)) != y || iso_T_inv(y) != x) ++failures;
    // T applied to an independent vector as well, so T T^{-1} = id is not
    // only checked on the range of T.
    const auto z = random_exact_vector(rng, 12);
    if (iso_T(iso_T_inv(z)) != z) ++failures;
  }
  return {failures == 0, "200 vectors, s-norm by chain DP and by T^{-1}, " + std::to_string(failures) + " failures"};
}

Result criterion_9() {
  std::size_t failures = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = trial_stream(kSeed, 9, t);
    const auto x = random_exact_vector(rng, 8);
    const ExactBidualVector embedded{x, Rational(0)};
    const auto j = james_norm_sq(x).norm_sq;
    if (bidual_norm_sq(embedded).norm_sq != j || bidual_norm_bruteforce_sq(embedded) != j) ++failures;
  }
  std::size_t oracle_failures = 0;
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = trial_stream(kSeed, 90, t);
    const auto x = random_exact_bidual(rng, 8);
    const auto dp = bidual_norm_sq(x).norm_sq;
    if (dp != bidual_norm_bruteforce_sq(x, 8) || dp != oracle::bidual_sq(x)) ++oracle_failures;
  }
  const bool e_omega = is_extreme_BJss(omega_unit<Rational>()).verdict;
  const ExactBidualVector example{ExactVector::dense({Rational(2, 3), Rational(-1, 3)}), Rational(2, 3)};
  const bool example_extreme = is_extreme_BJss(example).verdict;
  return {failures == 0 && oracle_failures == 0 && e_omega && example_extreme,
          "reduction failures " + std::to_string(failures) + "/200, oracle mismatches " +
              std::to_string(oracle_failures) + "/200, e_w " + (e_omega ? "extreme" : "NOT extreme") +
              ", (2/3,-1/3;w 2/3) " + (example_extreme ? "extreme" : "NOT extreme")};
}

std::vector<std::vector<double>> radius_lists() {
  std::vector<std::vector<double>> out;
  const double r1 = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 1; k <= 6; ++k) {
    // Evenly spaced radii, evenly spaced squares, and seeded random spacings.
    std::vector<double> even{1.0};
    std::vector<double> squares{1.0};
    if (k > 1) {
      even.clear();
      squares.clear();
      for (std::size_t i = 0; i < k; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(k - 1);
        even.push_back(r1 + (1.0 - r1) * u);
        squares.push_back(std::sqrt(0.5 + 0.5 * u));
      }
      even.back() = 1.0;
      squares.back() = 1.0;
    }
    out.push_back(even);
    out.push_back(squares);
    for (std::size_t t = 0; t < 50 && k > 1; ++t) {
      auto rng = trial_stream(kSeed, 100 + k, t);
      const auto uniform = [&] { return static_cast<double>(rng.next() >> 11) * 0x1.0p-53; };
      const double first = r1 + 0.25 * uniform();
      std::vector<double> cuts;
      for (std::size_t i = 0; i + 2 < k; ++i) cuts.push_back(0.05 + 0.9 * uniform());
      std::sort(cuts.begin(), cuts.end());
      std::vector<double> r{first};
      for (double c : cuts) r.push_back(first + (1.0 - first) * c);
      r.push_back(1.0);
      out.push_back(r);
    }
  }
  return out;
}

Result criterion_10() {
  double worst_eset = 0.0;
  for (int i = 1; i <= 19; ++i) worst_eset = std::max(worst_eset, e_set_residual(e_set_point(0.05 * i)));
  double worst_identity = 0.0;
  double worst_margin = INFINITY;
  std::size_t lists = 0;
  for (const auto& r : radius_lists()) {
    ++lists;
    const auto report = check_prop65(r, prop65_sequence(r));
    worst_identity = std::max(worst_identity, report.identity_residual);
    if (report.intervals_checked > 0) worst_margin = std::min(worst_margin, report.min_margin);
  }
  std::ostringstream os;
  os << "E-set worst residual " << worst_eset << " over 19 points; " << lists
     << " radius lists, worst identity residual " << worst_identity << ", smallest margin " << worst_margin;
  return {worst_eset <= kESetResidual && worst_identity <= kProp65Residual && worst_margin > kProp65Margin, os.str()};
}

Result criterion_11() {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t draws = 0;
  for (std::uint64_t t = 0; instances < 10000; ++t) {
    auto rng = trial_stream(kSeed, 11, t);
    ++draws;
    const Rational rho = random_coefficient(rng);
    const Rational gamma = random_coefficient(rng);
    const Rational eps = random_coefficient(rng);
    const Rational delta = random_coefficient(rng);
    if (!lemma_l1_precondition(rho, gamma, eps, delta)) continue;
    ++instances;
    if (!lemma_l1_predicate(rho, gamma, eps, delta)) ++failures;
  }
  return {failures == 0,
          std::to_string(instances) + " instances from " + std::to_string(draws) + " draws, " +
              std::to_string(failures) + " failures"};
}

Result guarded(const std::function<Result()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace
}  // namespace jameskit

int main() {
  using namespace jameskit;
  const auto first500 = vectors(1, 500, 10);
  const auto box8 = mixed_vectors(3, 400, 8);
  Result structure;
  std::vector<Result> results;
  results.push_back(guarded([&] { return criterion_1(first500); }));
  results.push_back(guarded([&] { return criterion_2(first500); }));
  results.push_back(guarded([&] { return criteria_3_and_4(box8, structure); }));
  results.push_back(structure);
  results.push_back(guarded(criterion_5));
  results.push_back(guarded(criterion_6));
  results.push_back(guarded(criterion_7));
  results.push_back(guarded(criterion_8));
  results.push_back(guarded(criterion_9));
  results.push_back(guarded(criterion_10));
  results.push_back(guarded(criterion_11));

  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::printf("criterion %2zu %s  %s\n", i + 1, results[i].pass ? "PASS" : "FAIL", results[i].detail.c_str());
    all = all && results[i].pass;
  }
  return all ? 0 : 1;
}
