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

#include "chunkscore/repair.hpp"

#include <algorithm>

#include "chunkscore/chunks.hpp"
#include "chunkscore/errors.hpp"
#include "chunkscore/validate.hpp"

namespace chunkscore {
namespace {

// True when the repaired predecessor keeps a chunk of `type` open, i.e. an
// I-`type` at this point is a valid continuation.
bool continues_chunk(const std::vector<Label>& repaired, std::size_t index,
                     const std::string& type) {
  return index > 0 && !repaired[index - 1].is_outside() &&
         repaired[index - 1].entity_type == type;
}

std::vector<Label> bio_begin(std::span<const Label> input) {
  std::vector<Label> out(input.begin(), input.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].prefix == 'I' && !continues_chunk(out, i, out[i].entity_type)) {
      out[i].prefix = 'B';
    }
  }
  return out;
}

std::vector<Label> bio_discard(std::span<const Label> input) {
  std::vector<Label> out(input.begin(), input.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Checking against the already-repaired prefix makes discarding
    // transitive: every I- continuing from a dropped token drops too.
    if (out[i].prefix == 'I' && !continues_chunk(out, i, out[i].entity_type)) {
      out[i] = Label::outside();
    }
  }
  return out;
}

std::vector<Label> bio_stanza(std::span<const Label> input) {
  std::vector<Label> out(input.begin(), input.end());
  std::size_t i = 0;
  while (i < out.size()) {
    if (out[i].is_outside()) {
      ++i;
      continue;
    }
    // A segment is a B plus its following I run, or an orphan I run entered
    // from O/start. Orphans are dropped first; a B segment with any type
    // mismatch becomes one chunk typed by its last token.
    std::size_t j = i + 1;
    while (j < out.size() && out[j].prefix == 'I') ++j;
    if (out[i].prefix == 'I') {
      for (std::size_t k = i; k < j; ++k) out[k] = Label::outside();
    } else {
      const std::string type = out[j - 1].entity_type;
      out[i] = Label::of('B', type);
      for (std::size_t k = i + 1; k < j; ++k) out[k] = Label::of('I', type);
    }
    i = j;
  }
  return out;
}

struct IntendedChunk {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string entity_type;
  bool valid_entry = true;
};

// Chunk structure an IOB1 sequence intends, tolerant of invalid B positions:
// B always starts a chunk, I continues a directly preceding same-type chunk
// or starts one. Only B tokens can sit in invalid positions under IOB1.
std::vector<IntendedChunk> iob1_intended_chunks(std::span<const Label> input) {
  std::vector<IntendedChunk> chunks;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Label& label = input[i];
    if (label.is_outside()) continue;
    const bool open = !chunks.empty() && chunks.back().end == i &&
                      chunks.back().entity_type == label.entity_type;
    if (label.prefix == 'I' && open) {
      chunks.back().end = i + 1;
      continue;
    }
    bool valid_entry = true;
    if (label.prefix == 'B') {
      valid_entry = i > 0 && !input[i - 1].is_outside() &&
                    input[i - 1].entity_type == label.entity_type;
    }
    chunks.push_back({i, i + 1, label.entity_type, valid_entry});
  }
  return chunks;
}

std::vector<Label> iob1_reencode(const std::vector<IntendedChunk>& kept, std::size_t length) {
  std::vector<Chunk> chunks;
  chunks.reserve(kept.size());
  for (const IntendedChunk& chunk : kept) {
    chunks.push_back({chunk.start, chunk.end, chunk.entity_type});
  }
  return encode(chunks, length, EncodingScheme::from_kind(SchemeKind::IOB1));
}

// begin keeps every intended chunk; invalid starts come out in canonical
// IOB1 form (I-X, since nothing of the same type directly precedes them).
std::vector<Label> iob1_begin(std::span<const Label> input) {
  return iob1_reencode(iob1_intended_chunks(input), input.size());
}

// discard drops each chunk started by an invalidly positioned B; survivors
// are re-encoded canonically (a B left dangling after a dropped chunk
// becomes I).
std::vector<Label> iob1_discard(std::span<const Label> input) {
  std::vector<IntendedChunk> kept;
  for (IntendedChunk& chunk : iob1_intended_chunks(input)) {
    if (chunk.valid_entry) kept.push_back(std::move(chunk));
  }
  return iob1_reencode(kept, input.size());
}

}  // namespace

RepairMethod repair_method_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "begin") return RepairMethod::Begin;
  if (lower == "discard") return RepairMethod::Discard;
  if (lower == "stanza") return RepairMethod::Stanza;
  if (lower == "none") return RepairMethod::None;
  throw ContractError("unknown repair method '" + std::string(name) +
                      "' (expected begin, discard, stanza or none)");
}

std::string_view to_string(RepairMethod method) {
  switch (method) {
    case RepairMethod::Begin:
      return "begin";
    case RepairMethod::Discard:
      return "discard";
    case RepairMethod::Stanza:
      return "stanza";
    case RepairMethod::None:
      return "none";
  }
  return "unknown";
}

SequenceRepair repair_sequence(std::span<const Label> labels, const EncodingScheme& scheme,
                               RepairMethod method) {
  if (method == RepairMethod::None) {
    const auto invalid = find_invalid_transitions(labels, scheme);
    if (!invalid.empty()) {
      const InvalidTransition& first = invalid.front();
      throw InvalidSequenceError("invalid transition " +
                                 transition_point_name(first.prev, true) + " -> " +
                                 transition_point_name(first.cur, false) + " at token " +
                                 std::to_string(first.token_index) +
                                 " (repair method is none)");
    }
    return {std::vector<Label>(labels.begin(), labels.end()), {}};
  }

  if (scheme.kind() != SchemeKind::BIO && scheme.kind() != SchemeKind::IOB1) {
    throw UnsupportedRepairError("repair is only supported for BIO and IOB1 encodings, not " +
                                 scheme.name());
  }
  if (method == RepairMethod::Stanza && scheme.kind() == SchemeKind::IOB1) {
    throw UnsupportedRepairError("stanza repair is only defined for BIO");
  }

  std::vector<Label> repaired;
  if (scheme.kind() == SchemeKind::BIO) {
    switch (method) {
      case RepairMethod::Begin:
        repaired = bio_begin(labels);
        break;
      case RepairMethod::Discard:
        repaired = bio_discard(labels);
        break;
      default:
        repaired = bio_stanza(labels);
        break;
    }
  } else {
    repaired = method == RepairMethod::Begin ? iob1_begin(labels) : iob1_discard(labels);
  }

  SequenceRepair result;
  result.labels = std::move(repaired);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!(labels[i] == result.labels[i])) {
      result.changes.push_back({i, labels[i], result.labels[i]});
    }
  }
  return result;
}

CorpusRepair repair_corpus(const Corpus& corpus, const EncodingScheme& scheme,
                           RepairMethod method) {
  if (method == RepairMethod::None) {
    ValidationReport report = validate_corpus(corpus, scheme);
    if (!report.errors.empty()) {
      throw ValidationFailedError(corpus.source_name +
                                      " contains invalid label sequences and the repair "
                                      "method is none",
                                  std::move(report));
    }
  }

  CorpusRepair result;
  result.labels.reserve(corpus.token_count());
  std::size_t sentence_index = 0;
  for (const Document& document : corpus.documents) {
    for (const Sentence& sentence : document.sentences) {
      if (sentence.is_docstart_marker()) {
        result.labels.push_back(sentence.rows.front().label());
        ++sentence_index;
        continue;
      }
      const std::vector<Label> labels = parse_sentence_labels(sentence, scheme);
      SequenceRepair repaired = repair_sequence(labels, scheme, method);
      for (const Label& label : repaired.labels) result.labels.push_back(label.to_string());
      for (const TokenRepair& change : repaired.changes) {
        result.records.push_back({sentence_index, change.token_index,
                                  change.original.to_string(), change.repaired.to_string(),
                                  sentence.rows[change.token_index].line_number});
      }
      ++sentence_index;
    }
  }
  return result;
}

}  // namespace chunkscore
