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

#ifndef JAMESKIT_CLI_HPP
#define JAMESKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jameskit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

/// Runs one command line (without the program name). JSON goes to out, a
/// one-line human summary and any error message to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jameskit::cli

#endif  // JAMESKIT_CLI_HPP
