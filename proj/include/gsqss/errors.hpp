// Copyright 2026 The gsqss Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gsqss {

/// Malformed graph text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string &what, std::size_t line, std::size_t column) {
    std::string out = "parse error";
    if (line != 0) {
      out += " at line " + std::to_string(line);
      if (column != 0) {
        out += ", column " + std::to_string(column);
      }
    }
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A coalition has no witness of the requested kind.
class NoWitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration or simulation would exceed its configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantum register is not in the state a protocol step requires.
class ProtocolStateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operator would act on qubits held outside the reconstructing coalition.
class LocalityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer classical shares (or players) than the threshold requires.
class InsufficientShares : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsqss
