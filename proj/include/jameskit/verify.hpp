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

// Randomised self-checks run by `jameskit verify` and `jameskit fuzz`.
//
// Trials may run on several threads; each trial draws from its own seeded
// stream and results are collected by trial index, so a report depends only
// on the options.

#ifndef JAMESKIT_VERIFY_HPP
#define JAMESKIT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jameskit/scalar.hpp"

namespace jameskit {

struct VerifyOptions {
  /// Largest vector length drawn. Suites that call a brute-force oracle
  /// clamp it to the oracle cap.
  Index n = 8;
  std::size_t trials = 200;
  std::uint64_t seed = 0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  std::size_t bruteforce_cap = 14;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Description of the lowest-index failing trial.
  std::optional<std::string> first_failure;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options);

struct FuzzMismatch {
  std::size_t trial = 0;
  std::string vector_json;
  std::string dp_norm_sq;
  std::string bruteforce_norm_sq;
};

struct FuzzReport {
  std::size_t trials = 0;
  std::vector<FuzzMismatch> mismatches;
};

/// Random exact vectors, DP norm against the brute-force oracle.
FuzzReport run_fuzz(const VerifyOptions& options);

}  // namespace jameskit

#endif  // JAMESKIT_VERIFY_HPP
