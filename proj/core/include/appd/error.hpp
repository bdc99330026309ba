// Copyright 2026 The appd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace appd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (ragged rows, unparsable numbers, unreadable files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a data-model invariant
/// (non-finite value, asymmetric matrix, nonzero diagonal).
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// A precondition of an operation does not hold (e.g. size caps).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by cooperative deadline checks inside long-running algorithms.
class TimeoutExpired : public Error {
 public:
  TimeoutExpired() : Error("deadline expired") {}
};

}  // namespace appd
