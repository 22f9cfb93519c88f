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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chunkscore {

/// Position a prefix marks within a chunk.
enum class PrefixRole { Outside, Begin, Inside, End, Single };

enum class SchemeKind { IO, IOB1, BIO, BIOES, BILOU, BMES, BMEOW };

/// A chunk encoding scheme: its prefix alphabet and transition rules.
///
/// BIO is IOB2; BILOU, BMES and BMEOW are relabelings of BIOES and share its
/// state machine. O is part of every alphabet (BMES gets one too, since NER
/// corpora need an outside state).
class EncodingScheme {
 public:
  /// Looks up a scheme by name (case-insensitive). Canonical names:
  /// IO, IOB1, BIO, BIOES, BILOU, BMES, BMEOW. Throws ContractError otherwise.
  static EncodingScheme from_name(std::string_view name);
  static EncodingScheme from_kind(SchemeKind kind) { return EncodingScheme(kind); }
  static const std::vector<std::string>& canonical_names();

  SchemeKind kind() const noexcept { return kind_; }
  const std::string& name() const;
  /// Prefix characters legal under the scheme, e.g. "OBIES".
  const std::string& prefix_alphabet() const;
  bool allows_prefix(char prefix) const;

  /// True for BIOES, BILOU, BMES and BMEOW.
  bool is_bioes_family() const noexcept;
  /// Role a prefix plays under this scheme; prefix must be in the alphabet.
  PrefixRole role_of(char prefix) const;
  /// Prefix the scheme uses for a role; the role must exist in the scheme.
  char prefix_for(PrefixRole role) const;

  bool operator==(const EncodingScheme&) const = default;

 private:
  explicit EncodingScheme(SchemeKind kind) : kind_(kind) {}
  SchemeKind kind_;
};

/// A parsed token label: a prefix symbol plus an entity type.
/// The type is empty exactly when the prefix is O.
struct Label {
  char prefix = 'O';
  std::string entity_type;

  bool is_outside() const noexcept { return prefix == 'O'; }
  std::string to_string() const;

  static Label outside() { return Label{}; }
  static Label of(char prefix, std::string entity_type) {
    return Label{prefix, std::move(entity_type)};
  }

  bool operator==(const Label&) const = default;
};

/// Parses a raw label string under the scheme. "O" is the outside label; any
/// other label is a single-character prefix from the scheme's alphabet, a
/// hyphen, and a non-empty entity type. The split happens at the FIRST hyphen,
/// so types may themselves contain hyphens ("I-MISC-SUB" -> I, "MISC-SUB").
/// Prefixes are case-sensitive and uppercase. Throws FormatError otherwise.
Label parse_label(std::string_view raw, const EncodingScheme& scheme);

/// True when `cur` may follow `prev` under the scheme's state machine.
/// std::nullopt stands for the sentence boundary: sentence start as `prev`,
/// sentence end as `cur`. Sentence boundaries reset the state machine, so a
/// sentence is checked over the virtual sequence start . l1 ... ln . end.
bool transition_valid(const std::optional<Label>& prev, const std::optional<Label>& cur,
                      const EncodingScheme& scheme);

/// One invalid adjacent pair found in a sequence.
struct InvalidTransition {
  std::optional<Label> prev;  ///< nullopt = sentence start
  std::optional<Label> cur;   ///< nullopt = sentence end
  /// Index of the current token; for the end transition, of the last token.
  std::size_t token_index = 0;
};

/// Every invalid transition over start . l1 ... ln . end, in sequence order.
std::vector<InvalidTransition> find_invalid_transitions(std::span<const Label> labels,
                                                        const EncodingScheme& scheme);

bool sequence_valid(std::span<const Label> labels, const EncodingScheme& scheme);

/// "start", "end", or the label string.
std::string transition_point_name(const std::optional<Label>& label, bool is_prev);

}  // namespace chunkscore
