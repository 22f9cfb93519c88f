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

#include "chunkscore/score.hpp"

#include <algorithm>
#include <map>

#include "chunkscore/chunks.hpp"
#include "chunkscore/errors.hpp"
#include "chunkscore/format.hpp"
#include "chunkscore/validate.hpp"

namespace chunkscore {
namespace {

double ratio(std::size_t numerator, std::size_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) / static_cast<double>(denominator);
}

double harmonic_f1(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

std::vector<const Sentence*> flatten(const Corpus& corpus) {
  std::vector<const Sentence*> sentences;
  sentences.reserve(corpus.sentence_count());
  for (const Document& document : corpus.documents) {
    for (const Sentence& sentence : document.sentences) sentences.push_back(&sentence);
  }
  return sentences;
}

void check_alignment(const Corpus& reference, const Corpus& prediction,
                     bool allow_token_mismatch) {
  if (reference.document_count() != prediction.document_count()) {
    throw AlignmentError("alignment error: " + reference.source_name + " has " +
                         std::to_string(reference.document_count()) + " documents but " +
                         prediction.source_name + " has " +
                         std::to_string(prediction.document_count()));
  }
  for (std::size_t d = 0; d < reference.documents.size(); ++d) {
    const std::size_t ref_count = reference.documents[d].sentences.size();
    const std::size_t pred_count = prediction.documents[d].sentences.size();
    if (ref_count != pred_count) {
      throw AlignmentError("alignment error: document " + std::to_string(d + 1) + " has " +
                           std::to_string(ref_count) + " sentences in " +
                           reference.source_name + " but " + std::to_string(pred_count) +
                           " in " + prediction.source_name);
    }
  }

  const std::vector<const Sentence*> ref_sentences = flatten(reference);
  const std::vector<const Sentence*> pred_sentences = flatten(prediction);
  for (std::size_t s = 0; s < ref_sentences.size(); ++s) {
    const Sentence& ref = *ref_sentences[s];
    const Sentence& pred = *pred_sentences[s];
    if (ref.rows.size() != pred.rows.size()) {
      throw AlignmentError(
          "alignment error: sentence " + std::to_string(s + 1) + " has " +
          std::to_string(ref.rows.size()) + " tokens in " + reference.source_name + " (line " +
          std::to_string(ref.rows.front().line_number) + ") but " +
          std::to_string(pred.rows.size()) + " in " + prediction.source_name + " (line " +
          std::to_string(pred.rows.front().line_number) + ")");
    }
    if (allow_token_mismatch) continue;
    for (std::size_t t = 0; t < ref.rows.size(); ++t) {
      if (ref.rows[t].text() != pred.rows[t].text()) {
        throw AlignmentError("alignment error: token text mismatch in sentence " +
                             std::to_string(s + 1) + ": '" + ref.rows[t].text() + "' (" +
                             reference.source_name + " line " +
                             std::to_string(ref.rows[t].line_number) + ") vs '" +
                             pred.rows[t].text() + "' (" + prediction.source_name + " line " +
                             std::to_string(pred.rows[t].line_number) + ")");
      }
    }
  }
}

// Chunks of one sentence given its post-repair label strings. Marker
// sentences never carry chunks.
std::vector<Chunk> sentence_chunks(const Sentence& sentence,
                                   std::span<const std::string> labels,
                                   const EncodingScheme& scheme) {
  if (sentence.is_docstart_marker()) return {};
  std::vector<Label> parsed;
  parsed.reserve(labels.size());
  for (std::size_t t = 0; t < labels.size(); ++t) {
    try {
      parsed.push_back(parse_label(labels[t], scheme));
    } catch (const FormatError& error) {
      throw FormatError(std::string(error.what()) + " on line " +
                            std::to_string(sentence.rows[t].line_number),
                        sentence.rows[t].line_number);
    }
  }
  return decode(parsed, scheme);
}

}  // namespace

double TypeCounts::precision() const { return ratio(true_positives, predicted_count); }
double TypeCounts::recall() const { return ratio(true_positives, reference_count); }
double TypeCounts::f1() const { return harmonic_f1(precision(), recall()); }

ScoreReport score_pair(const Corpus& reference, const Corpus& prediction,
                       const EncodingScheme& scheme, RepairMethod method,
                       const ScoreOptions& options) {
  check_alignment(reference, prediction, options.allow_token_mismatch);

  // A gold standard that does not follow the scheme is refused, never
  // silently reinterpreted; repairing it is an explicit, loud choice.
  ValidationReport reference_report = validate_corpus(reference, scheme);
  if (!reference_report.errors.empty() && !options.repair_reference) {
    throw ValidationFailedError(
        "reference " + reference.source_name + " is invalid under " + scheme.name() +
            "; validate and repair it first (or request reference repair explicitly)",
        std::move(reference_report));
  }

  ScoreReport report;
  report.invalid_transitions = count_repairs(prediction, scheme);

  const CorpusRepair prediction_repair = repair_corpus(prediction, scheme, method);
  std::vector<std::string> reference_labels;
  if (options.repair_reference) {
    CorpusRepair reference_repair = repair_corpus(reference, scheme, method);
    reference_labels = std::move(reference_repair.labels);
    report.reference_repaired_tokens = reference_repair.records.size();
  } else {
    reference_labels = reference.labels();
  }

  const std::vector<const Sentence*> ref_sentences = flatten(reference);
  const std::vector<const Sentence*> pred_sentences = flatten(prediction);

  std::map<std::string, TypeCounts> by_type;
  std::size_t matching_tokens = 0;
  std::size_t offset = 0;
  for (std::size_t s = 0; s < ref_sentences.size(); ++s) {
    const Sentence& ref = *ref_sentences[s];
    const Sentence& pred = *pred_sentences[s];
    const std::size_t length = ref.rows.size();
    const std::span<const std::string> ref_labels(reference_labels.data() + offset, length);
    const std::span<const std::string> pred_labels(prediction_repair.labels.data() + offset,
                                                   length);
    for (std::size_t t = 0; t < length; ++t) {
      if (ref_labels[t] == pred_labels[t]) ++matching_tokens;
    }

    std::vector<Chunk> ref_chunks = sentence_chunks(ref, ref_labels, scheme);
    std::vector<Chunk> pred_chunks = sentence_chunks(pred, pred_labels, scheme);
    std::sort(ref_chunks.begin(), ref_chunks.end());
    std::sort(pred_chunks.begin(), pred_chunks.end());
    std::vector<Chunk> matched;
    std::set_intersection(ref_chunks.begin(), ref_chunks.end(), pred_chunks.begin(),
                          pred_chunks.end(), std::back_inserter(matched));

    for (const Chunk& chunk : ref_chunks) ++by_type[chunk.entity_type].reference_count;
    for (const Chunk& chunk : pred_chunks) ++by_type[chunk.entity_type].predicted_count;
    for (const Chunk& chunk : matched) ++by_type[chunk.entity_type].true_positives;
    offset += length;
  }

  for (auto& [type, counts] : by_type) {
    counts.entity_type = type;
    report.reference_total += counts.reference_count;
    report.predicted_total += counts.predicted_count;
    report.true_positive_total += counts.true_positives;
    report.per_type.push_back(counts);
  }
  report.micro_precision = ratio(report.true_positive_total, report.predicted_total);
  report.micro_recall = ratio(report.true_positive_total, report.reference_total);
  report.micro_f1 = harmonic_f1(report.micro_precision, report.micro_recall);
  report.token_accuracy = ratio(matching_tokens, reference.token_count());
  return report;
}

std::size_t count_repairs(const Corpus& prediction, const EncodingScheme& scheme) {
  return validate_corpus(prediction, scheme).errors.size();
}

std::string format_score_table(const ScoreReport& report) {
  const std::vector<std::string> header = {"type",      "reference", "predicted", "tp",
                                           "precision", "recall",    "f1"};
  std::vector<std::vector<std::string>> rows;
  const auto add_row = [&rows](const std::string& name, std::size_t reference,
                               std::size_t predicted, std::size_t tp, double precision,
                               double recall, double f1) {
    rows.push_back({name, std::to_string(reference), std::to_string(predicted),
                    std::to_string(tp), format_percentage(precision),
                    format_percentage(recall), format_percentage(f1)});
  };
  for (const TypeCounts& counts : report.per_type) {
    add_row(counts.entity_type, counts.reference_count, counts.predicted_count,
            counts.true_positives, counts.precision(), counts.recall(), counts.f1());
  }
  add_row("MICRO", report.reference_total, report.predicted_total, report.true_positive_total,
          report.micro_precision, report.micro_recall, report.micro_f1);

  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::size_t width = header[c].size();
    for (const auto& row : rows) width = std::max(width, row[c].size());
    widths.push_back(width);
  }
  std::string out;
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += "  ";
      out += c == 0 ? pad_right(cells[c], widths[c]) : pad_left(cells[c], widths[c]);
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  out += '\n';
  out += "token accuracy: " + format_percentage(report.token_accuracy) + "\n";
  out += "invalid transitions repaired: " + std::to_string(report.invalid_transitions) + "\n";
  return out;
}

namespace {

std::string csv_cell(const std::string& value) {
  if (value.find(',') == std::string::npos && value.find('"') == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string format_score_csv(const ScoreReport& report) {
  std::string out = "entity_type,reference,predicted,tp,precision,recall,f1\n";
  const auto add_row = [&out](const std::string& name, std::size_t reference,
                              std::size_t predicted, std::size_t tp, double precision,
                              double recall, double f1) {
    out += csv_cell(name) + "," + std::to_string(reference) + "," + std::to_string(predicted) +
           "," + std::to_string(tp) + "," + format_raw(precision) + "," + format_raw(recall) +
           "," + format_raw(f1) + "\n";
  };
  for (const TypeCounts& counts : report.per_type) {
    add_row(counts.entity_type, counts.reference_count, counts.predicted_count,
            counts.true_positives, counts.precision(), counts.recall(), counts.f1());
  }
  add_row("MICRO", report.reference_total, report.predicted_total, report.true_positive_total,
          report.micro_precision, report.micro_recall, report.micro_f1);
  return out;
}

}  // namespace chunkscore
