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

#include <string>
#include <vector>

#include "chunkscore/conll.hpp"
#include "chunkscore/labels.hpp"

namespace chunkscore {

/// Converts label encodings at the mention level: each sentence is decoded
/// under `from` and re-encoded canonically under `to`, so invalid sequences
/// can never propagate token-by-token into the output. Marker rows pass
/// through unchanged.
///
/// Throws ValidationFailedError (with the full record list) when the input
/// is invalid under `from`; conversion never repairs implicitly — run the
/// repair step first, so there are no hidden changes.
std::vector<std::string> convert_corpus(const Corpus& corpus, const EncodingScheme& from,
                                        const EncodingScheme& to);

}  // namespace chunkscore
