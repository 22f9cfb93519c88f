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

#include "chunkscore/convert.hpp"

#include "chunkscore/chunks.hpp"
#include "chunkscore/validate.hpp"

namespace chunkscore {

std::vector<std::string> convert_corpus(const Corpus& corpus, const EncodingScheme& from,
                                        const EncodingScheme& to) {
  ValidationReport report = validate_corpus(corpus, from);
  if (!report.errors.empty()) {
    throw ValidationFailedError("cannot convert " + corpus.source_name +
                                    ": input is invalid under " + from.name() +
                                    "; repair it first",
                                std::move(report));
  }

  std::vector<std::string> out;
  out.reserve(corpus.token_count());
  for (const Document& document : corpus.documents) {
    for (const Sentence& sentence : document.sentences) {
      if (sentence.is_docstart_marker()) {
        out.push_back(sentence.rows.front().label());
        continue;
      }
      const std::vector<Label> labels = parse_sentence_labels(sentence, from);
      const std::vector<Chunk> chunks = decode(labels, from);
      for (const Label& label : encode(chunks, labels.size(), to)) {
        out.push_back(label.to_string());
      }
    }
  }
  return out;
}

}  // namespace chunkscore
