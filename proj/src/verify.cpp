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

#include "jameskit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "jameskit/constructions.hpp"
#include "jameskit/json_io.hpp"
#include "jameskit/random.hpp"

namespace jameskit {
namespace {

// Pairwise checks look at no more than this many partitions per vector.
constexpr std::size_t kPairwiseLimit = 64;

using Trial = std::function<std::optional<std::string>(SplitMix64&)>;

std::string show(const ExactVector& x) { return vector_to_json(x).dump(); }

unsigned thread_count(const VerifyOptions& o) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return o.threads == 0 ? std::min(hw, 8u) : o.threads;
}

SuiteResult run_suite(const VerifyOptions& o, std::uint64_t suite_id, std::string name, const Trial& trial) {
  std::vector<std::optional<std::string>> results(o.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < o.trials; t = next++) {
      auto rng = trial_stream(o.seed, suite_id, t);
      try {
        results[t] = trial(rng);
      } catch (const std::exception& e) {
        results[t] = std::string("exception: ") + e.what();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < thread_count(o); ++i) pool.emplace_back(worker);
  pool.clear();

  SuiteResult out{std::move(name), o.trials, 0, std::nullopt};
  for (std::size_t t = 0; t < results.size(); ++t) {
    if (!results[t]) continue;
    if (++out.failures == 1) out.first_failure = "trial " + std::to_string(t) + ": " + *results[t];
  }
  return out;
}

bool nested_or_disjoint(const Interval& a, const Interval& b) {
  return a.contains(b) || b.contains(a) || !a.intersects(b);
}

std::optional<std::string> norm_trial(SplitMix64& rng, Index len) {
  const auto x = random_exact_vector(rng, len);
  const auto cert = james_norm_sq(x);
  const auto brute = james_norm_bruteforce_sq(x, static_cast<std::size_t>(len));
  if (cert.norm_sq != brute) return "DP " + cert.norm_sq.to_string() + " vs brute force " + brute.to_string() + " on " + show(x);
  if (!x.is_zero_vector() && !is_norming_partition(x, cert.witness)) return "witness does not norm " + show(x);
  return std::nullopt;
}

std::optional<std::string> extreme_trial(SplitMix64& rng, Index len) {
  const auto x = random_nonzero_exact_vector(rng, len);
  const bool direction = is_extreme_direction(x);
  const bool npr = is_npr_hereditary(x).hereditary && james_norm_sq(x).norm_sq == l2_norm_sq(x);
  const auto finest = finest_partition(x);
  const bool singletons =
      std::all_of(finest.begin(), finest.end(), [](const Interval& iv) { return iv.lo() == iv.hi(); });
  if (direction != npr || direction != singletons) return "extreme criteria disagree on " + show(x);
  return std::nullopt;
}

std::optional<std::string> nesting_trial(SplitMix64& rng, Index len) {
  const auto x = random_nonzero_exact_vector(rng, len);
  const auto all = enumerate_norming_partitions(x);
  if (!all.truncated && BigInt(static_cast<unsigned long>(all.partitions.size())) != count_norming_partitions(x)) {
    return "count DP disagrees with enumeration on " + show(x);
  }
  const auto finest = finest_partition(x);
  const std::size_t m = std::min(all.partitions.size(), kPairwiseLimit);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = all.partitions[i];
    if (!refines(x, finest, p)) return "finest partition does not refine " + p.to_string() + " on " + show(x);
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& q = all.partitions[j];
      for (const auto& a : p) {
        for (const auto& b : q) {
          if (!nested_or_disjoint(a, b)) return a.to_string() + " and " + b.to_string() + " overlap on " + show(x);
        }
      }
      joint_refinement(x, p, q);
    }
  }
  return std::nullopt;
}

std::optional<std::string> structure_trial(SplitMix64& rng, Index len) {
  const auto x = random_nonzero_exact_vector(rng, len);
  for (const auto& p : enumerate_norming_partitions(x, kPairwiseLimit).partitions) {
    if (!check_structure(x, p).all()) return "structure check fails for " + p.to_string() + " on " + show(x);
  }
  return std::nullopt;
}

std::optional<std::string> isometry_trial(SplitMix64& rng, Index len) {
  const auto x = random_exact_vector(rng, len);
  const auto y = iso_T(x);
  const auto j = james_norm_sq(x).norm_sq;
  if (s_norm_sq(y) != j || s_norm_sq_direct(y) != j) return "s-norm of T x differs from the J norm on " + show(x);
  if (iso_T_inv(y) != x || iso_T(iso_T_inv(x)) != x) return "T and its inverse do not compose to id on " + show(x);
  return std::nullopt;
}

std::optional<std::string> bidual_trial(SplitMix64& rng, Index len) {
  const auto x = random_exact_bidual(rng, len);
  const auto cert = bidual_norm_sq(x);
  const auto brute = bidual_norm_bruteforce_sq(x, static_cast<std::size_t>(len));
  const auto finite_only = james_norm_sq(x.finite).norm_sq;
  if (cert.norm_sq != brute) return "bidual DP differs from brute force on " + bidual_to_json(x).dump();
  if (bidual_norm_sq(ExactBidualVector{x.finite, Rational(0)}).norm_sq != finite_only) {
    return "zero omega does not reduce to J on " + bidual_to_json(x).dump();
  }
  if (finite_only > cert.norm_sq) return "dropping omega increased the norm on " + bidual_to_json(x).dump();
  Rational witnessed(0);
  for (const auto& iv : cert.witness) witnessed += square(bidual_interval_sum(x, iv));
  if (witnessed != cert.norm_sq) return "bidual witness does not attain the norm on " + bidual_to_json(x).dump();
  return std::nullopt;
}

std::optional<std::string> dual_trial(SplitMix64& rng, Index len) {
  const auto f = random_exact_functional(rng, len);
  if (!validate_D1(f)) return "generator produced a functional outside D1: " + functional_to_json(f).dump();
  const auto bounds = dual_norm_bounds(f);
  const bool tight = bounds.lower_sq == Rational(1) && bounds.upper_sq == Rational(1);
  if (is_norm_one_D1(f) != tight) return "norm-one test disagrees with bounds on " + functional_to_json(f).dump();
  return std::nullopt;
}

std::optional<std::string> lemma_trial(SplitMix64& rng) {
  for (;;) {
    const Rational gamma = random_coefficient(rng);
    const Rational eps = random_coefficient(rng);
    const Rational delta = random_coefficient(rng);
    if (sign(eps) == 0 || sign(eps) != sign(delta)) continue;
    const Rational room = square(Rational(gamma + eps)) - square(gamma);
    if (room < Rational(0)) continue;
    const Rational rho = room * Rational(rng.between(0, 8), 8);
    if (!lemma_l1_precondition(rho, gamma, eps, delta)) return "generated instance misses the precondition";
    if (!lemma_l1_predicate(rho, gamma, eps, delta)) {
      return "conclusion fails for rho=" + rho.to_string() + " gamma=" + gamma.to_string() +
             " eps=" + eps.to_string() + " delta=" + delta.to_string();
    }
    return std::nullopt;
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
}

VerifyReport run_verify(const VerifyOptions& o) {
  const Index n = std::max<Index>(1, o.n);
  const Index oracle_n = std::min<Index>(n, static_cast<Index>(o.bruteforce_cap));
  VerifyReport report;
  report.suites.push_back(run_suite(o, 1, "norm_dp_vs_bruteforce", [&](SplitMix64& r) { return norm_trial(r, oracle_n); }));
  report.suites.push_back(run_suite(o, 2, "extreme_criteria", [&](SplitMix64& r) { return extreme_trial(r, n); }));
  report.suites.push_back(run_suite(o, 3, "nesting_refinement", [&](SplitMix64& r) { return nesting_trial(r, n); }));
  report.suites.push_back(run_suite(o, 4, "partition_structure", [&](SplitMix64& r) { return structure_trial(r, n); }));
  report.suites.push_back(run_suite(o, 5, "isometry", [&](SplitMix64& r) { return isometry_trial(r, n); }));
  report.suites.push_back(run_suite(o, 6, "bidual", [&](SplitMix64& r) { return bidual_trial(r, oracle_n); }));
  report.suites.push_back(run_suite(o, 7, "dual_norm_one", [&](SplitMix64& r) { return dual_trial(r, n); }));
  report.suites.push_back(run_suite(o, 8, "scalar_lemma", [](SplitMix64& r) { return lemma_trial(r); }));
  return report;
}

FuzzReport run_fuzz(const VerifyOptions& o) {
  const Index n = std::clamp<Index>(o.n, 1, static_cast<Index>(o.bruteforce_cap));
  std::vector<std::optional<FuzzMismatch>> results(o.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < o.trials; t = next++) {
      auto rng = trial_stream(o.seed, 0, t);
      const auto x = random_exact_vector(rng, n);
      const auto dp = james_norm_sq(x).norm_sq;
      const auto brute = james_norm_bruteforce_sq(x, o.bruteforce_cap);
      if (dp != brute) results[t] = FuzzMismatch{t, show(x), dp.to_string(), brute.to_string()};
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < thread_count(o); ++i) pool.emplace_back(worker);
  pool.clear();

  FuzzReport report{o.trials, {}};
  for (auto& r : results) {
    if (r) report.mismatches.push_back(std::move(*r));
  }
  return report;
}

}  // namespace jameskit
