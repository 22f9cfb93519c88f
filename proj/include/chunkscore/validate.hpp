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
#include <string>
#include <vector>

#include "chunkscore/conll.hpp"
#include "chunkscore/errors.hpp"
#include "chunkscore/labels.hpp"

namespace chunkscore {

/// One invalid transition, with file provenance.
struct TransitionErrorRecord {
  std::string previous;  ///< raw label string, or "start"
  std::string current;   ///< raw label string, or "end"
  std::string token;     ///< token text of the involved token
  std::size_t line_number = 0;

  bool operator==(const TransitionErrorRecord&) const = default;
};

/// A -DOCSTART- marker row whose label is not O. Reported separately from
/// transition errors; marker rows never enter the transition state machine.
struct DocstartWarning {
  std::string label;
  std::size_t line_number = 0;
};

struct ValidationReport {
  std::vector<TransitionErrorRecord> errors;  ///< in file order
  std::vector<DocstartWarning> warnings;
  std::size_t token_count = 0;     ///< all tokens in the corpus
  std::size_t sequence_count = 0;  ///< sentences, marker rows included
  std::size_t document_count = 0;
  std::string source_name;

  /// Distinct tokens involved in invalid transitions (what the report's
  /// "in N tokens" counts).
  std::size_t error_token_count() const;
};

/// Checks every sentence against the scheme and reports each invalid
/// transition with exact provenance. Validation never mutates anything.
/// Label parse failures throw FormatError with the offending line.
ValidationReport validate_corpus(const Corpus& corpus, const EncodingScheme& scheme);

/// Renders the report: a summary line
///   Encountered {E} errors in {T} tokens, {S} sequences, and {D} documents in {source}
/// then one line per record:
///   Invalid transition {prev} -> {cur} for token '{tok}' on line {n}
/// Warnings are not part of this text.
std::string format_report(const ValidationReport& report);

/// Raised when an operation requires a scheme-valid corpus and got errors;
/// carries the full report.
class ValidationFailedError : public Error {
 public:
  ValidationFailedError(const std::string& message, ValidationReport report)
      : Error(message), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace chunkscore
