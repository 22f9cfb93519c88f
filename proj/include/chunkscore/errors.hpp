// Copyright 2026 chunkscore contributors
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

namespace chunkscore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  EncodingError(const std::string& message, std::size_t byte_offset)
      : Error(message), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

/// A line or label string does not match the expected format.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message, std::size_t line_number = 0)
      : Error(message), line_number_(line_number) {}
  /// 1-based source line, or 0 when no line context is available.
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

/// A label sequence violates the scheme's transition rules.
class InvalidSequenceError : public Error {
 public:
  using Error::Error;
};

/// Repair was requested for a scheme/method combination that has none.
class UnsupportedRepairError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments that violate its contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Reference and prediction corpora do not line up structurally.
class AlignmentError : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace chunkscore
