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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chunkscore/conll.hpp"
#include "chunkscore/labels.hpp"

namespace chunkscore {

/// How invalid label sequences are made valid before use.
///
/// begin   - conlleval-style: an I- in an invalid position becomes B-.
/// discard - tokens started by an invalid sequence become O; valid chunks
///           before the invalid point are kept.
/// stanza  - reproduces Stanza's behaviour (a behavioural approximation,
///           fixed from its published examples): runs of I- entered from O
///           are dropped, and a B/I run containing a type mismatch is kept
///           as one chunk typed by the run's last token.
/// none    - no transformation; invalid input is an error.
enum class RepairMethod { Begin, Discard, Stanza, None };

/// Parses "begin" / "discard" / "stanza" / "none" (case-insensitive).
RepairMethod repair_method_from_name(std::string_view name);
std::string_view to_string(RepairMethod method);

/// One token changed by repairing a single sequence.
struct TokenRepair {
  std::size_t token_index = 0;
  Label original;
  Label repaired;

  bool operator==(const TokenRepair&) const = default;
};

struct SequenceRepair {
  std::vector<Label> labels;  ///< always valid under the scheme
  std::vector<TokenRepair> changes;
};

/// Repairs one sentence's labels. begin/discard are defined for BIO and
/// IOB1; stanza for BIO only; none validates under any scheme and returns
/// the input unchanged. Sentence boundaries reset the state machine, so
/// repair never sees cross-sentence context.
///
/// Throws UnsupportedRepairError for unrepairable scheme/method pairs and
/// InvalidSequenceError when method none meets an invalid sequence.
SequenceRepair repair_sequence(std::span<const Label> labels, const EncodingScheme& scheme,
                               RepairMethod method);

/// A repaired token with corpus provenance.
struct RepairRecord {
  std::size_t sentence_index = 0;  ///< 0-based over the whole corpus
  std::size_t token_index = 0;     ///< 0-based within the sentence
  std::string original;
  std::string repaired;
  std::size_t line_number = 0;
};

struct CorpusRepair {
  std::vector<std::string> labels;  ///< one per token, corpus order
  std::vector<RepairRecord> records;
};

/// Repairs every sentence of a corpus. -DOCSTART- marker rows pass through
/// untouched. With method none, throws ValidationFailedError carrying the
/// full validation report when the corpus is invalid.
CorpusRepair repair_corpus(const Corpus& corpus, const EncodingScheme& scheme,
                           RepairMethod method);

}  // namespace chunkscore
