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

#include "chunkscore/conll.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "chunkscore/errors.hpp"

namespace chunkscore {
namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.emplace_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

std::size_t Corpus::sentence_count() const {
  std::size_t count = 0;
  for (const Document& document : documents) count += document.sentences.size();
  return count;
}

std::size_t Corpus::token_count() const {
  std::size_t count = 0;
  for (const Document& document : documents) {
    for (const Sentence& sentence : document.sentences) count += sentence.rows.size();
  }
  return count;
}

std::vector<std::string> Corpus::labels() const {
  std::vector<std::string> out;
  out.reserve(token_count());
  for (const Document& document : documents) {
    for (const Sentence& sentence : document.sentences) {
      for (const TokenRow& row : sentence.rows) out.push_back(row.label());
    }
  }
  return out;
}

std::size_t find_invalid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const unsigned char lead = static_cast<unsigned char>(bytes[i]);
    std::size_t continuations;
    unsigned char low = 0x80;
    unsigned char high = 0xBF;
    if (lead < 0x80) {
      ++i;
      continue;
    } else if (lead >= 0xC2 && lead <= 0xDF) {
      continuations = 1;
    } else if (lead == 0xE0) {
      continuations = 2;
      low = 0xA0;  // reject overlong encodings
    } else if (lead >= 0xE1 && lead <= 0xEC) {
      continuations = 2;
    } else if (lead == 0xED) {
      continuations = 2;
      high = 0x9F;  // reject surrogates
    } else if (lead >= 0xEE && lead <= 0xEF) {
      continuations = 2;
    } else if (lead == 0xF0) {
      continuations = 3;
      low = 0x90;
    } else if (lead >= 0xF1 && lead <= 0xF3) {
      continuations = 3;
    } else if (lead == 0xF4) {
      continuations = 3;
      high = 0x8F;  // reject > U+10FFFF
    } else {
      return i;
    }
    for (std::size_t k = 1; k <= continuations; ++k) {
      if (i + k >= n) return i + k;
      const unsigned char byte = static_cast<unsigned char>(bytes[i + k]);
      const unsigned char lo = k == 1 ? low : 0x80;
      const unsigned char hi = k == 1 ? high : 0xBF;
      if (byte < lo || byte > hi) return i + k;
    }
    i += continuations + 1;
  }
  return std::string_view::npos;
}

Corpus parse_corpus(std::string_view input, std::string source_name) {
  if (const std::size_t offset = find_invalid_utf8(input); offset != std::string_view::npos) {
    throw EncodingError("invalid UTF-8 in " + source_name + " at byte offset " +
                            std::to_string(offset),
                        offset);
  }

  Corpus corpus;
  corpus.source_name = std::move(source_name);

  std::vector<Sentence> sentences;  // current document
  bool document_marked = false;
  std::vector<TokenRow> rows;  // current sentence

  const auto flush_sentence = [&] {
    if (!rows.empty()) {
      sentences.push_back(Sentence{std::move(rows)});
      rows.clear();
    }
  };
  const auto flush_document = [&] {
    flush_sentence();
    if (!sentences.empty()) {
      corpus.documents.push_back(Document{std::move(sentences), document_marked});
      sentences.clear();
    }
  };

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < input.size()) {
    const std::size_t newline = input.find('\n', pos);
    std::string_view line = newline == std::string_view::npos
                                ? input.substr(pos)
                                : input.substr(pos, newline - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_number;

    std::vector<std::string> fields = split_fields(line);
    if (fields.empty()) {
      flush_sentence();
    } else if (fields.size() < 2) {
      throw FormatError("line " + std::to_string(line_number) + " in " + corpus.source_name +
                            ": expected at least a token and a label, got 1 field",
                        line_number);
    } else if (fields.front() == kDocstartText) {
      flush_document();
      document_marked = true;
      sentences.push_back(Sentence{{TokenRow{std::move(fields), line_number}}});
    } else {
      rows.push_back(TokenRow{std::move(fields), line_number});
    }

    if (newline == std::string_view::npos) break;
    pos = newline + 1;
  }
  flush_document();
  return corpus;
}

std::string write_corpus(const Corpus& corpus, std::span<const std::string> labels) {
  const std::size_t expected = corpus.token_count();
  if (labels.size() != expected) {
    throw ContractError("label count mismatch: corpus has " + std::to_string(expected) +
                        " tokens but " + std::to_string(labels.size()) + " labels were supplied");
  }

  std::string out;
  std::size_t next_label = 0;
  bool first_sentence = true;
  for (const Document& document : corpus.documents) {
    for (const Sentence& sentence : document.sentences) {
      if (!first_sentence) out += '\n';
      first_sentence = false;
      for (const TokenRow& row : sentence.rows) {
        for (std::size_t f = 0; f + 1 < row.fields.size(); ++f) {
          out += row.fields[f];
          out += ' ';
        }
        out += labels[next_label++];
        out += '\n';
      }
    }
  }
  return out;
}

Corpus read_corpus_file(const std::string& path) {
  if (path == "-") {
    std::string input(std::istreambuf_iterator<char>(std::cin), {});
    return parse_corpus(input, "<stdin>");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string input(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError("failed to read " + path);
  return parse_corpus(input, path);
}

std::vector<Label> parse_sentence_labels(const Sentence& sentence,
                                         const EncodingScheme& scheme) {
  std::vector<Label> labels;
  labels.reserve(sentence.rows.size());
  for (const TokenRow& row : sentence.rows) {
    try {
      labels.push_back(parse_label(row.label(), scheme));
    } catch (const FormatError& error) {
      throw FormatError(std::string(error.what()) + " on line " +
                            std::to_string(row.line_number),
                        row.line_number);
    }
  }
  return labels;
}

}  // namespace chunkscore
