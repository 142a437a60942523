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

#include "jameskit/partition.hpp"

#include <algorithm>
#include <set>

#include "jameskit/detail/profile.hpp"
#include "jameskit/errors.hpp"

namespace jameskit {
namespace {

template <ScalarType T>
struct Analysis {
  std::vector<Index> support;
  detail::Profile<T> profile;
  detail::PartitionTables<T> tables;

  explicit Analysis(const BasicVector<T>& x)
      : support(x.support()), profile(x.values()), tables(detail::build_tables(profile)) {}

  std::size_t size() const { return support.size(); }
  const T& total() const { return tables.total(); }

  bool block_is_optimal(std::size_t i, std::size_t j, double tol) const {
    return near(tables.best_with_block(profile, i, j), total(), tol);
  }

  Interval to_interval(std::size_t i, std::size_t j) const {
    return Interval::finite(support[i - 1], support[j - 1]);
  }

  /// Compact index of a support point; 0 if n is not in the support.
  std::size_t compact_index(Index n) const {
    auto it = std::lower_bound(support.begin(), support.end(), n);
    if (it == support.end() || *it != n) return 0;
    return static_cast<std::size_t>(it - support.begin()) + 1;
  }
};

template <ScalarType T>
void require_nonzero(const BasicVector<T>& x, const char* op) {
  if (x.is_zero_vector()) throw ValidationError(std::string(op) + " requires a nonzero vector");
}

/// Compact end positions of the blocks of a partition-shaped family.
template <ScalarType T>
std::set<std::size_t> block_ends(const Analysis<T>& a, const IntervalFamily& p) {
  std::set<std::size_t> ends;
  for (const auto& iv : p) ends.insert(a.compact_index(iv.hi()));
  return ends;
}

template <ScalarType T>
void enumerate_from(const Analysis<T>& a, const std::vector<std::vector<std::size_t>>& block_ends_by_start,
                    std::size_t start, std::vector<std::pair<std::size_t, std::size_t>>& stack,
                    std::size_t limit, double tol, PartitionEnumeration<T>& out) {
  if (out.truncated) return;
  if (start > a.size()) {
    T value(0);
    std::vector<Interval> blocks;
    for (const auto& [i, j] : stack) {
      value += a.profile.sum_sq(i, j);
      blocks.push_back(a.to_interval(i, j));
    }
    if (!near(value, a.total(), tol)) {
      throw InternalError("enumerated partition of optimal blocks is not norming");
    }
    if (out.partitions.size() == limit) {
      out.truncated = true;
      return;
    }
    out.partitions.emplace_back(std::move(blocks));
    return;
  }
  for (std::size_t end : block_ends_by_start[start]) {
    stack.emplace_back(start, end);
    enumerate_from(a, block_ends_by_start, end + 1, stack, limit, tol, out);
    stack.pop_back();
  }
}

}  // namespace

template <ScalarType T>
bool OptimalIntervalSet<T>::contains(const Interval& iv) const {
  return std::binary_search(intervals.begin(), intervals.end(), iv, [](const Interval& a, const Interval& b) {
    return a.lo() != b.lo() ? a.lo() < b.lo() : a.hi() < b.hi();
  });
}

template <ScalarType T>
bool is_norming_family(const BasicVector<T>& x, const IntervalFamily& family, double tol) {
  return near(eval_family_sq(x, family), james_norm_sq(x).norm_sq, tol);
}

template <ScalarType T>
bool is_norming_partition(const BasicVector<T>& x, const IntervalFamily& family, double tol) {
  return has_partition_shape(x, family) && is_norming_family(x, family, tol);
}

template <ScalarType T>
OptimalIntervalSet<T> optimal_intervals(const BasicVector<T>& x, double tol) {
  require_nonzero(x, "optimal_intervals");
  const Analysis<T> a(x);
  OptimalIntervalSet<T> out;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i; j <= a.size(); ++j) {
      if (a.block_is_optimal(i, j, tol)) out.intervals.push_back(a.to_interval(i, j));
    }
  }
  out.support = a.support;
  out.prefix_best = a.tables.prefix_best;
  out.suffix_best = a.tables.suffix_best;
  out.norm_sq = a.total();
  return out;
}

template <ScalarType T>
IntervalFamily finest_partition(const BasicVector<T>& x, double tol) {
  require_nonzero(x, "finest_partition");
  const Analysis<T> a(x);
  const std::size_t k = a.size();
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t p = 1; p <= k; ++p) {
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (std::size_t i = 1; i <= p; ++i) {
      for (std::size_t j = p; j <= k; ++j) {
        if (best.first != 0 && j - i >= best.second - best.first) break;
        if (a.block_is_optimal(i, j, tol)) best = {i, j};
      }
    }
    if (best.first == 0) throw InternalError("support point in no optimal interval");
    if (blocks.empty() || blocks.back() != best) blocks.push_back(best);
  }
  std::vector<Interval> intervals;
  std::size_t next = 1;
  for (const auto& [i, j] : blocks) {
    if (i != next) throw InternalError("minimal optimal intervals do not tile the support");
    intervals.push_back(a.to_interval(i, j));
    next = j + 1;
  }
  IntervalFamily out(std::move(intervals));
  if (!is_norming_partition(x, out, tol)) throw InternalError("finest partition is not norming");
  return out;
}

template <ScalarType T>
PartitionEnumeration<T> enumerate_norming_partitions(const BasicVector<T>& x, std::size_t limit, double tol) {
  require_nonzero(x, "enumerate_norming_partitions");
  const Analysis<T> a(x);
  std::vector<std::vector<std::size_t>> ends(a.size() + 2);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i; j <= a.size(); ++j) {
      if (a.block_is_optimal(i, j, tol)) ends[i].push_back(j);
    }
  }
  PartitionEnumeration<T> out;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  enumerate_from(a, ends, 1, stack, limit, tol, out);
  return out;
}

template <ScalarType T>
BigInt count_norming_partitions(const BasicVector<T>& x, double tol) {
  require_nonzero(x, "count_norming_partitions");
  const Analysis<T> a(x);
  const auto& f = a.tables.prefix_best;
  // ways[j]: partitions of the first j support points attaining F(j).
  std::vector<BigInt> ways(a.size() + 1, BigInt(0));
  ways[0] = 1;
  for (std::size_t j = 1; j <= a.size(); ++j) {
    for (std::size_t i = 1; i <= j; ++i) {
      if (ways[i - 1] != 0 && near(T(f[i - 1] + a.profile.sum_sq(i, j)), f[j], tol)) ways[j] += ways[i - 1];
    }
  }
  return ways[a.size()];
}

template <ScalarType T>
std::optional<T> optimality_margin(const BasicVector<T>& x, double tol) {
  require_nonzero(x, "optimality_margin");
  const Analysis<T> a(x);
  std::optional<T> best_other;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = i; j <= a.size(); ++j) {
      T v = a.tables.best_with_block(a.profile, i, j);
      if (near(v, a.total(), tol)) continue;
      if (!best_other || v > *best_other) best_other = std::move(v);
    }
  }
  if (!best_other) return std::nullopt;
  return T((a.total() - *best_other) / a.total());
}

template <ScalarType T>
bool refines(const BasicVector<T>& x, const IntervalFamily& p, const IntervalFamily& q, double tol) {
  if (!is_norming_partition(x, p, tol) || !is_norming_partition(x, q, tol)) {
    throw ValidationError("refines: both arguments must be norming partitions of x");
  }
  const Analysis<T> a(x);
  const auto p_ends = block_ends(a, p);
  const auto q_ends = block_ends(a, q);
  return std::includes(p_ends.begin(), p_ends.end(), q_ends.begin(), q_ends.end());
}

template <ScalarType T>
IntervalFamily joint_refinement(const BasicVector<T>& x, const IntervalFamily& p, const IntervalFamily& q,
                                double tol) {
  if (!is_norming_partition(x, p, tol) || !is_norming_partition(x, q, tol)) {
    throw ValidationError("joint_refinement: both arguments must be norming partitions of x");
  }
  std::vector<Interval> merged;
  for (const auto& iv : p) {
    if (std::any_of(q.begin(), q.end(), [&](const Interval& l) { return l.contains(iv); })) merged.push_back(iv);
  }
  for (const auto& l : q) {
    if (std::any_of(p.begin(), p.end(), [&](const Interval& iv) { return iv.contains(l); })) merged.push_back(l);
  }
  std::sort(merged.begin(), merged.end(), [](const Interval& a, const Interval& b) {
    return a.lo() != b.lo() ? a.lo() < b.lo() : a.hi() < b.hi();
  });
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (!IntervalFamily::is_valid(merged)) throw InternalError("joint refinement has overlapping blocks");
  IntervalFamily out(std::move(merged));
  if (!is_norming_partition(x, out, tol) || !refines(x, out, p, tol) || !refines(x, out, q, tol)) {
    throw InternalError("joint refinement is not a norming common refinement");
  }
  return out;
}

template <ScalarType T>
PartitionReport check_structure(const BasicVector<T>& x, const IntervalFamily& p, double tol) {
  PartitionReport report;
  const auto entries = x.entries();

  report.covers_support = std::all_of(entries.begin(), entries.end(), [&](const auto& e) {
    return std::any_of(p.begin(), p.end(), [&](const Interval& iv) { return iv.contains(e.index); });
  });

  std::vector<T> block_sums;
  for (const auto& iv : p) block_sums.push_back(interval_sum(x, iv));

  report.subfamily_tight = true;
  for (std::size_t lo = 0; lo < p.size() && report.subfamily_tight; ++lo) {
    T lhs(0);
    std::vector<typename BasicVector<T>::Entry> restricted;
    for (std::size_t hi = lo; hi < p.size(); ++hi) {
      lhs += square(block_sums[hi]);
      for (const auto& e : entries) {
        if (p[hi].contains(e.index)) restricted.push_back(e);
      }
      const auto rhs = james_norm_sq(BasicVector<T>::from_entries(restricted)).norm_sq;
      if (!near(lhs, rhs, tol)) {
        report.subfamily_tight = false;
        break;
      }
    }
  }

  report.same_sign_partials = true;
  for (std::size_t b = 0; b < p.size() && report.same_sign_partials; ++b) {
    const int s = sign(block_sums[b]);
    if (s == 0) {
      report.same_sign_partials = false;
      break;
    }
    T prefix(0);
    for (const auto& e : entries) {
      if (!p[b].contains(e.index)) continue;
      prefix += e.value;
      const T suffix = block_sums[b] - prefix + e.value;
      if (sign(prefix) != s || sign(suffix) != s) {
        report.same_sign_partials = false;
        break;
      }
    }
  }

  report.alternating_blocks = true;
  for (std::size_t b = 0; b + 1 < block_sums.size(); ++b) {
    if (sign(block_sums[b]) * sign(block_sums[b + 1]) >= 0) report.alternating_blocks = false;
  }

  report.same_sign_pairs_together = true;
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (sign(entries[i].value) * sign(entries[i + 1].value) <= 0) continue;
    for (const auto& iv : p) {
      if (iv.contains(entries[i].index) != iv.contains(entries[i + 1].index)) {
        report.same_sign_pairs_together = false;
      }
    }
  }
  return report;
}

#define JAMESKIT_INSTANTIATE(T)                                                                              \
  template struct OptimalIntervalSet<T>;                                                                     \
  template bool is_norming_family<T>(const BasicVector<T>&, const IntervalFamily&, double);                  \
  template bool is_norming_partition<T>(const BasicVector<T>&, const IntervalFamily&, double);               \
  template OptimalIntervalSet<T> optimal_intervals<T>(const BasicVector<T>&, double);                        \
  template IntervalFamily finest_partition<T>(const BasicVector<T>&, double);                                \
  template PartitionEnumeration<T> enumerate_norming_partitions<T>(const BasicVector<T>&, std::size_t, double); \
  template BigInt count_norming_partitions<T>(const BasicVector<T>&, double);                                \
  template std::optional<T> optimality_margin<T>(const BasicVector<T>&, double);                             \
  template bool refines<T>(const BasicVector<T>&, const IntervalFamily&, const IntervalFamily&, double);     \
  template IntervalFamily joint_refinement<T>(const BasicVector<T>&, const IntervalFamily&,                  \
                                              const IntervalFamily&, double);                                \
  template PartitionReport check_structure<T>(const BasicVector<T>&, const IntervalFamily&, double);

JAMESKIT_INSTANTIATE(Rational)
JAMESKIT_INSTANTIATE(double)
#undef JAMESKIT_INSTANTIATE

}  // namespace jameskit
