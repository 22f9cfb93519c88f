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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chunkscore/labels.hpp"

namespace chunkscore {

/// A typed mention as a half-open token-index span within one sentence.
struct Chunk {
  std::size_t start = 0;  ///< inclusive, 0-based
  std::size_t end = 0;    ///< exclusive
  std::string entity_type;

  auto operator<=>(const Chunk&) const = default;
};

/// Decodes a valid label sequence into the maximal chunks it encodes.
/// Refuses invalid input: throws InvalidSequenceError naming the first
/// offending transition (repair is a separate, explicit step).
std::vector<Chunk> decode(std::span<const Label> labels, const EncodingScheme& scheme);

/// Encodes chunks into the scheme's canonical label sequence over `length`
/// tokens. Chunks must be sorted by start, non-overlapping, in range and
/// carry non-empty types; throws ContractError otherwise.
std::vector<Label> encode(std::span<const Chunk> chunks, std::size_t length,
                          const EncodingScheme& scheme);

}  // namespace chunkscore
