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

namespace chunkscore {

/// Fixed-point rendering with round-half-even at `decimals` places.
/// format_fixed(3.125, 2) == "3.12", format_fixed(0.00015705, 4) == "0.0002".
std::string format_fixed(double value, int decimals);

/// A fraction in [0, 1] as a percentage with two decimals: "33.33".
std::string format_percentage(double fraction);

/// Shortest representation that round-trips the double exactly ("0.5", "1").
std::string format_raw(double value);

std::string pad_left(const std::string& text, std::size_t width);
std::string pad_right(const std::string& text, std::size_t width);

}  // namespace chunkscore
