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

#ifndef JAMESKIT_ERRORS_HPP
#define JAMESKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jameskit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed data, violated precondition, mode mismatch.
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ModeMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CapExceededError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A result failed its own self-check. Never expected; signals a bug.
/// The CLI maps these to exit code 3.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jameskit

#endif  // JAMESKIT_ERRORS_HPP
