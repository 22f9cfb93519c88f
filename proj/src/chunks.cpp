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

#include "chunkscore/chunks.hpp"

#include "chunkscore/errors.hpp"

namespace chunkscore {
namespace {

void check_chunk_contract(std::span<const Chunk> chunks, std::size_t length) {
  std::size_t previous_end = 0;
  bool first = true;
  for (const Chunk& chunk : chunks) {
    if (chunk.start >= chunk.end || chunk.end > length) {
      throw ContractError("chunk [" + std::to_string(chunk.start) + ", " +
                          std::to_string(chunk.end) + ") is out of range for length " +
                          std::to_string(length));
    }
    if (!first && chunk.start < previous_end) {
      throw ContractError("chunks overlap or are not sorted by start");
    }
    if (chunk.entity_type.empty()) throw ContractError("chunk has an empty entity type");
    previous_end = chunk.end;
    first = false;
  }
}

}  // namespace

std::vector<Chunk> decode(std::span<const Label> labels, const EncodingScheme& scheme) {
  const auto invalid = find_invalid_transitions(labels, scheme);
  if (!invalid.empty()) {
    const InvalidTransition& first = invalid.front();
    throw InvalidSequenceError("invalid transition " +
                               transition_point_name(first.prev, true) + " -> " +
                               transition_point_name(first.cur, false) + " at token " +
                               std::to_string(first.token_index));
  }

  std::vector<Chunk> chunks;
  const std::size_t n = labels.size();

  switch (scheme.kind()) {
    case SchemeKind::IO: {
      // A chunk is a maximal run of same-typed I labels.
      std::size_t i = 0;
      while (i < n) {
        if (labels[i].is_outside()) {
          ++i;
          continue;
        }
        std::size_t j = i + 1;
        while (j < n && !labels[j].is_outside() &&
               labels[j].entity_type == labels[i].entity_type) {
          ++j;
        }
        chunks.push_back({i, j, labels[i].entity_type});
        i = j;
      }
      break;
    }

    case SchemeKind::BIO: {
      for (std::size_t i = 0; i < n; ++i) {
        if (labels[i].prefix == 'B') {
          chunks.push_back({i, i + 1, labels[i].entity_type});
        } else if (labels[i].prefix == 'I') {
          // Validity guarantees a same-typed open chunk directly before.
          chunks.back().end = i + 1;
        }
      }
      break;
    }

    case SchemeKind::IOB1: {
      // I starts or continues a chunk; B always forces a new chunk.
      for (std::size_t i = 0; i < n; ++i) {
        const Label& label = labels[i];
        if (label.is_outside()) continue;
        const bool continues = label.prefix == 'I' && !chunks.empty() &&
                               chunks.back().end == i &&
                               chunks.back().entity_type == label.entity_type;
        if (continues) {
          chunks.back().end = i + 1;
        } else {
          chunks.push_back({i, i + 1, label.entity_type});
        }
      }
      break;
    }

    default: {
      std::size_t open_start = 0;
      for (std::size_t i = 0; i < n; ++i) {
        switch (scheme.role_of(labels[i].prefix)) {
          case PrefixRole::Outside:
            break;
          case PrefixRole::Single:
            chunks.push_back({i, i + 1, labels[i].entity_type});
            break;
          case PrefixRole::Begin:
            open_start = i;
            break;
          case PrefixRole::Inside:
            break;
          case PrefixRole::End:
            chunks.push_back({open_start, i + 1, labels[i].entity_type});
            break;
        }
      }
      break;
    }
  }
  return chunks;
}

std::vector<Label> encode(std::span<const Chunk> chunks, std::size_t length,
                          const EncodingScheme& scheme) {
  check_chunk_contract(chunks, length);
  std::vector<Label> labels(length, Label::outside());

  const Chunk* previous = nullptr;
  for (const Chunk& chunk : chunks) {
    switch (scheme.kind()) {
      case SchemeKind::IO: {
        for (std::size_t i = chunk.start; i < chunk.end; ++i) {
          labels[i] = Label::of('I', chunk.entity_type);
        }
        break;
      }
      case SchemeKind::BIO: {
        labels[chunk.start] = Label::of('B', chunk.entity_type);
        for (std::size_t i = chunk.start + 1; i < chunk.end; ++i) {
          labels[i] = Label::of('I', chunk.entity_type);
        }
        break;
      }
      case SchemeKind::IOB1: {
        // B exists solely to split adjacent same-type chunks.
        const bool split = previous != nullptr && previous->end == chunk.start &&
                           previous->entity_type == chunk.entity_type;
        labels[chunk.start] = Label::of(split ? 'B' : 'I', chunk.entity_type);
        for (std::size_t i = chunk.start + 1; i < chunk.end; ++i) {
          labels[i] = Label::of('I', chunk.entity_type);
        }
        break;
      }
      default: {
        if (chunk.end - chunk.start == 1) {
          labels[chunk.start] =
              Label::of(scheme.prefix_for(PrefixRole::Single), chunk.entity_type);
        } else {
          labels[chunk.start] =
              Label::of(scheme.prefix_for(PrefixRole::Begin), chunk.entity_type);
          for (std::size_t i = chunk.start + 1; i + 1 < chunk.end; ++i) {
            labels[i] = Label::of(scheme.prefix_for(PrefixRole::Inside), chunk.entity_type);
          }
          labels[chunk.end - 1] =
              Label::of(scheme.prefix_for(PrefixRole::End), chunk.entity_type);
        }
        break;
      }
    }
    previous = &chunk;
  }
  return labels;
}

}  // namespace chunkscore
