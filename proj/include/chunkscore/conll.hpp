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

#include "chunkscore/labels.hpp"

namespace chunkscore {

inline constexpr std::string_view kDocstartText = "-DOCSTART-";

/// One non-blank line of a CoNLL-style file. The first field is the token
/// text, the last field is the label; middle columns (POS tags etc.) are
/// preserved but ignored.
struct TokenRow {
  std::vector<std::string> fields;  ///< at least 2, whitespace-free
  std::size_t line_number = 0;      ///< 1-based into the source file

  const std::string& text() const { return fields.front(); }
  const std::string& label() const { return fields.back(); }
  bool is_docstart() const { return fields.front() == kDocstartText; }

  bool operator==(const TokenRow&) const = default;
};

struct Sentence {
  std::vector<TokenRow> rows;  ///< never empty

  std::size_t size() const { return rows.size(); }
  /// -DOCSTART- rows always form their own one-row sentence.
  bool is_docstart_marker() const { return rows.size() == 1 && rows.front().is_docstart(); }

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::vector<Sentence> sentences;  ///< never empty
  bool has_docstart_marker = false;

  bool operator==(const Document&) const = default;
};

/// A parsed corpus: documents of sentences of token rows, with line
/// provenance for every row. Immutable after construction.
struct Corpus {
  std::vector<Document> documents;
  std::string source_name;

  std::size_t document_count() const { return documents.size(); }
  std::size_t sentence_count() const;
  std::size_t token_count() const;
  /// Raw label strings for every token, in corpus order.
  std::vector<std::string> labels() const;

  bool operator==(const Corpus&) const = default;
};

/// Parses CoNLL-style text. Blank (empty or whitespace-only) lines delimit
/// sentences and consecutive blanks collapse; any maximal run of spaces/tabs
/// separates fields; LF and CRLF both terminate lines. A row whose first
/// field is exactly -DOCSTART- closes the current document (if it holds any
/// sentence), opens a new one, and is retained as a one-row sentence of the
/// new document; a file without markers yields one document (or none when
/// there are no rows at all).
///
/// Throws EncodingError (with byte offset) on invalid UTF-8 and FormatError
/// (with line number) on a non-blank line with fewer than two fields.
Corpus parse_corpus(std::string_view input, std::string source_name);

/// Renders the corpus with each row's last field replaced by the supplied
/// label. Fields are joined by single spaces, sentences separated by one
/// blank line, with a trailing newline. `labels` must hold exactly one string
/// per token in corpus order (ContractError otherwise).
std::string write_corpus(const Corpus& corpus, std::span<const std::string> labels);

/// Reads a corpus from a file path, or from stdin when the path is "-"
/// (source name "<stdin>"). Throws IoError when the file cannot be read.
Corpus read_corpus_file(const std::string& path);

/// Byte offset of the first invalid UTF-8 byte, or npos when valid.
std::size_t find_invalid_utf8(std::string_view bytes);

/// Parses every label of a sentence under the scheme; FormatErrors are
/// re-thrown with the offending row's line number attached.
std::vector<Label> parse_sentence_labels(const Sentence& sentence, const EncodingScheme& scheme);

}  // namespace chunkscore
