// Copyright 2026 The qcmx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qcmx {

/// Operands disagree on qubit count or vector dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text. The message names the offending line when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal numerical consistency check failed (non-Hermitian residue,
/// non-finite energy, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The expectation cache was used against a state it was not recorded for,
/// or it holds conflicting values for the same word.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense oracle refused an operator above its qubit limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qcmx
