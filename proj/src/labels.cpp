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

#include "chunkscore/labels.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "chunkscore/errors.hpp"

namespace chunkscore {
namespace {

struct SchemeInfo {
  SchemeKind kind;
  std::string name;
  std::string alphabet;
  // Prefix for each PrefixRole (Outside, Begin, Inside, End, Single);
  // '\0' when the scheme lacks the role.
  std::array<char, 5> role_prefix;
};

const std::array<SchemeInfo, 7>& scheme_table() {
  static const std::array<SchemeInfo, 7> table = {{
      {SchemeKind::IO, "IO", "OI", {'O', '\0', 'I', '\0', '\0'}},
      {SchemeKind::IOB1, "IOB1", "OIB", {'O', 'B', 'I', '\0', '\0'}},
      {SchemeKind::BIO, "BIO", "OBI", {'O', 'B', 'I', '\0', '\0'}},
      {SchemeKind::BIOES, "BIOES", "OBIES", {'O', 'B', 'I', 'E', 'S'}},
      {SchemeKind::BILOU, "BILOU", "OBILU", {'O', 'B', 'I', 'L', 'U'}},
      {SchemeKind::BMES, "BMES", "OBMES", {'O', 'B', 'M', 'E', 'S'}},
      {SchemeKind::BMEOW, "BMEOW", "OBMEW", {'O', 'B', 'M', 'E', 'W'}},
  }};
  return table;
}

const SchemeInfo& info_for(SchemeKind kind) {
  for (const auto& info : scheme_table()) {
    if (info.kind == kind) return info;
  }
  throw ContractError("unknown scheme kind");
}

std::string to_upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

EncodingScheme EncodingScheme::from_name(std::string_view name) {
  const std::string upper = to_upper(name);
  for (const auto& info : scheme_table()) {
    if (info.name == upper) return EncodingScheme(info.kind);
  }
  throw ContractError("unknown encoding scheme '" + std::string(name) +
                      "' (expected one of IO, IOB1, BIO, BIOES, BILOU, BMES, BMEOW)");
}

const std::vector<std::string>& EncodingScheme::canonical_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& info : scheme_table()) out.push_back(info.name);
    return out;
  }();
  return names;
}

const std::string& EncodingScheme::name() const { return info_for(kind_).name; }

const std::string& EncodingScheme::prefix_alphabet() const { return info_for(kind_).alphabet; }

bool EncodingScheme::allows_prefix(char prefix) const {
  return prefix_alphabet().find(prefix) != std::string::npos;
}

bool EncodingScheme::is_bioes_family() const noexcept {
  return kind_ == SchemeKind::BIOES || kind_ == SchemeKind::BILOU ||
         kind_ == SchemeKind::BMES || kind_ == SchemeKind::BMEOW;
}

PrefixRole EncodingScheme::role_of(char prefix) const {
  const auto& roles = info_for(kind_).role_prefix;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == prefix) return static_cast<PrefixRole>(i);
  }
  throw ContractError("prefix '" + std::string(1, prefix) + "' is not part of " + name());
}

char EncodingScheme::prefix_for(PrefixRole role) const {
  const char prefix = info_for(kind_).role_prefix[static_cast<std::size_t>(role)];
  if (prefix == '\0') throw ContractError(name() + " has no prefix for the requested role");
  return prefix;
}

std::string Label::to_string() const {
  if (is_outside()) return "O";
  std::string out(1, prefix);
  out += '-';
  out += entity_type;
  return out;
}

Label parse_label(std::string_view raw, const EncodingScheme& scheme) {
  if (raw.empty()) throw FormatError("empty label");
  if (raw == "O") return Label::outside();
  const std::size_t hyphen = raw.find('-');
  if (hyphen == std::string_view::npos) {
    throw FormatError("label '" + std::string(raw) + "' has no prefix-type separator");
  }
  if (hyphen != 1) {
    throw FormatError("label '" + std::string(raw) +
                      "' must start with a single-character prefix followed by '-'");
  }
  const char prefix = raw.front();
  if (prefix == 'O') {
    throw FormatError("label '" + std::string(raw) + "' pairs O with an entity type");
  }
  if (!scheme.allows_prefix(prefix)) {
    throw FormatError("label '" + std::string(raw) + "' has prefix '" + std::string(1, prefix) +
                      "', not part of " + scheme.name());
  }
  std::string_view type = raw.substr(2);
  if (type.empty()) {
    throw FormatError("label '" + std::string(raw) + "' has an empty entity type");
  }
  return Label::of(prefix, std::string(type));
}

bool transition_valid(const std::optional<Label>& prev, const std::optional<Label>& cur,
                      const EncodingScheme& scheme) {
  switch (scheme.kind()) {
    case SchemeKind::IO:
      return true;

    case SchemeKind::BIO: {
      if (!cur || cur->is_outside() || cur->prefix == 'B') return true;
      // I-X continues a chunk: needs B-X or I-X of the same type before it.
      return prev && !prev->is_outside() && prev->entity_type == cur->entity_type;
    }

    case SchemeKind::IOB1: {
      if (!cur || cur->is_outside() || cur->prefix == 'I') return true;
      // B-X only splits off a directly preceding chunk of the same type.
      return prev && !prev->is_outside() && prev->entity_type == cur->entity_type;
    }

    default: {
      // BIOES family: a chunk opened by Begin must be closed by End before
      // anything else, including the end of the sentence.
      const bool open = prev && !prev->is_outside() &&
                        (scheme.role_of(prev->prefix) == PrefixRole::Begin ||
                         scheme.role_of(prev->prefix) == PrefixRole::Inside);
      if (!cur) return !open;
      const PrefixRole role = scheme.role_of(cur->prefix);
      if (!open) {
        return role == PrefixRole::Outside || role == PrefixRole::Begin ||
               role == PrefixRole::Single;
      }
      return (role == PrefixRole::Inside || role == PrefixRole::End) &&
             prev->entity_type == cur->entity_type;
    }
  }
}

std::vector<InvalidTransition> find_invalid_transitions(std::span<const Label> labels,
                                                        const EncodingScheme& scheme) {
  std::vector<InvalidTransition> invalid;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i <= n; ++i) {
    std::optional<Label> prev = i > 0 ? std::optional<Label>(labels[i - 1]) : std::nullopt;
    std::optional<Label> cur = i < n ? std::optional<Label>(labels[i]) : std::nullopt;
    if (transition_valid(prev, cur, scheme)) continue;
    const std::size_t token_index = i < n ? i : (n == 0 ? 0 : n - 1);
    invalid.push_back({std::move(prev), std::move(cur), token_index});
  }
  return invalid;
}

bool sequence_valid(std::span<const Label> labels, const EncodingScheme& scheme) {
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i <= n; ++i) {
    std::optional<Label> prev = i > 0 ? std::optional<Label>(labels[i - 1]) : std::nullopt;
    std::optional<Label> cur = i < n ? std::optional<Label>(labels[i]) : std::nullopt;
    if (!transition_valid(prev, cur, scheme)) return false;
  }
  return true;
}

std::string transition_point_name(const std::optional<Label>& label, bool is_prev) {
  if (!label) return is_prev ? "start" : "end";
  return label->to_string();
}

}  // namespace chunkscore
