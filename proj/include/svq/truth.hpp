// Copyright 2026 The svq Authors
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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

namespace svq {

/// Three truth values: determinately true, determinately false, or a gap
/// (neither). Rendered as "1", "0" and "0/0".
enum class TruthValue : std::uint8_t { False = 0, True = 1, Gap = 2 };

constexpr std::string_view to_string(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::True: return "1";
    case TruthValue::False: return "0";
    case TruthValue::Gap: return "0/0";
  }
  return "?";
}

constexpr std::optional<TruthValue> parse_truth(std::string_view text) noexcept {
  if (text == "1") return TruthValue::True;
  if (text == "0") return TruthValue::False;
  if (text == "0/0") return TruthValue::Gap;
  return std::nullopt;
}

constexpr bool is_determinate(TruthValue v) noexcept { return v != TruthValue::Gap; }

constexpr TruthValue from_bool(bool b) noexcept {
  return b ? TruthValue::True : TruthValue::False;
}

inline std::ostream& operator<<(std::ostream& os, TruthValue v) {
  return os << to_string(v);
}

}  // namespace svq
