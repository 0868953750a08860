// Copyright 2026 The dpdfg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "time_unit.hpp"

namespace dpdfg {

// Absolute instant: signed nanoseconds from the Unix epoch (UTC).
struct Timestamp {
  std::int64_t ns = 0;

  auto operator<=>(const Timestamp&) const = default;
};

// ISO-8601 subset: YYYY-MM-DD[(T| )HH:MM[:SS[.fraction]]][Z|(+|-)HH[:?MM]].
// Fractions beyond nanoseconds are truncated. No zone means UTC.
std::optional<Timestamp> parse_iso8601(std::string_view text);

// Plain decimal number counted in `unit` from the epoch (e.g. "2.4" hours).
std::optional<Timestamp> parse_numeric_timestamp(std::string_view text,
                                                 TimeUnit unit);

// Canonical UTC rendering with nine fractional digits:
// 2021-03-01T12:00:00.000000000Z. parse_iso8601 inverts it exactly.
std::string format_iso8601(Timestamp ts);

}  // namespace dpdfg
