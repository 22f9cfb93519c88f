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

#include "chunkscore/validate.hpp"

#include <set>

namespace chunkscore {

std::size_t ValidationReport::error_token_count() const {
  std::set<std::size_t> lines;
  for (const TransitionErrorRecord& record : errors) lines.insert(record.line_number);
  return lines.size();
}

ValidationReport validate_corpus(const Corpus& corpus, const EncodingScheme& scheme) {
  ValidationReport report;
  report.source_name = corpus.source_name;
  report.token_count = corpus.token_count();
  report.sequence_count = corpus.sentence_count();
  report.document_count = corpus.document_count();

  for (const Document& document : corpus.documents) {
    for (const Sentence& sentence : document.sentences) {
      if (sentence.is_docstart_marker()) {
        const TokenRow& row = sentence.rows.front();
        if (row.label() != "O") report.warnings.push_back({row.label(), row.line_number});
        continue;
      }
      const std::vector<Label> labels = parse_sentence_labels(sentence, scheme);
      for (const InvalidTransition& bad : find_invalid_transitions(labels, scheme)) {
        const TokenRow& row = sentence.rows[bad.token_index];
        TransitionErrorRecord record;
        if (!bad.cur) {
          // A chunk left open at the end of the sentence (BIOES family).
          record.previous = row.label();
          record.current = "end";
        } else {
          record.previous =
              bad.prev ? sentence.rows[bad.token_index - 1].label() : std::string("start");
          record.current = row.label();
        }
        record.token = row.text();
        record.line_number = row.line_number;
        report.errors.push_back(std::move(record));
      }
    }
  }
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::string out = "Encountered " + std::to_string(report.errors.size()) + " errors in " +
                    std::to_string(report.error_token_count()) + " tokens, " +
                    std::to_string(report.sequence_count) + " sequences, and " +
                    std::to_string(report.document_count) + " documents in " +
                    report.source_name + "\n";
  for (const TransitionErrorRecord& record : report.errors) {
    out += "Invalid transition " + record.previous + " -> " + record.current + " for token '" +
           record.token + "' on line " + std::to_string(record.line_number) + "\n";
  }
  return out;
}

}  // namespace chunkscore
