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
#include "chunkscore/labels.hpp"
#include "chunkscore/repair.hpp"

namespace chunkscore {

struct TypeCounts {
  std::string entity_type;
  std::size_t reference_count = 0;
  std::size_t predicted_count = 0;
  std::size_t true_positives = 0;

  double precision() const;  ///< 0 when nothing was predicted
  double recall() const;     ///< 0 when the reference has no chunks
  double f1() const;         ///< 0 when precision + recall is 0
};

/// Exact-match scores. Precision/recall/F1 are fractions in [0, 1];
/// display formats multiply by 100.
struct ScoreReport {
  std::vector<TypeCounts> per_type;  ///< sorted by entity type
  std::size_t reference_total = 0;
  std::size_t predicted_total = 0;
  std::size_t true_positive_total = 0;
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  /// Fraction of tokens whose post-repair label equals the reference label
  /// (marker rows included; they are tokens).
  double token_accuracy = 0.0;
  /// Invalid transitions found in the prediction before repair.
  std::size_t invalid_transitions = 0;
  /// Labels changed in the reference; nonzero only with repair_reference.
  std::size_t reference_repaired_tokens = 0;
};

struct ScoreOptions {
  /// Accept differing token text between reference and prediction.
  bool allow_token_mismatch = false;
  /// Repair an invalid reference with the selected method instead of
  /// refusing it. Callers should surface this loudly: a repaired gold
  /// standard is not the gold standard everyone else scored against.
  bool repair_reference = false;
};

/// Scores a prediction against a reference. The prediction is repaired with
/// `method` first; both sides are then decoded per sentence and a true
/// positive is an exact (start, end, type) match.
///
/// Preconditions enforced: identical document/sentence structure and
/// per-sentence token counts (AlignmentError otherwise, naming the first
/// divergent sentence); matching token text unless allowed; a reference
/// valid under the scheme unless repair_reference is set
/// (ValidationFailedError otherwise).
ScoreReport score_pair(const Corpus& reference, const Corpus& prediction,
                       const EncodingScheme& scheme, RepairMethod method,
                       const ScoreOptions& options = {});

/// Invalid transitions in a prediction — what repairing it would touch.
/// Equals the validate error count on the file.
std::size_t count_repairs(const Corpus& prediction, const EncodingScheme& scheme);

/// Human-readable table: per-type rows then a MICRO row, percentages with
/// two decimals (half-even), plus token accuracy and the repair count.
std::string format_score_table(const ScoreReport& report);

/// Machine output: header `entity_type,reference,predicted,tp,precision,
/// recall,f1`, one row per type, then a MICRO row. Rates are raw fractions.
std::string format_score_csv(const ScoreReport& report);

}  // namespace chunkscore
