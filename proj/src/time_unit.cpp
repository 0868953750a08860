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

#include "time_unit.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace dpdfg {

std::int64_t nanoseconds_per(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kNanoseconds:
      return 1;
    case TimeUnit::kMicroseconds:
      return 1'000;
    case TimeUnit::kMilliseconds:
      return 1'000'000;
    case TimeUnit::kSeconds:
      return 1'000'000'000;
    case TimeUnit::kMinutes:
      return 60LL * 1'000'000'000;
    case TimeUnit::kHours:
      return 3600LL * 1'000'000'000;
    case TimeUnit::kDays:
      return 86400LL * 1'000'000'000;
  }
  return 1;
}

std::string_view to_string(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kNanoseconds:
      return "ns";
    case TimeUnit::kMicroseconds:
      return "us";
    case TimeUnit::kMilliseconds:
      return "ms";
    case TimeUnit::kSeconds:
      return "s";
    case TimeUnit::kMinutes:
      return "min";
    case TimeUnit::kHours:
      return "h";
    case TimeUnit::kDays:
      return "d";
  }
  return "?";
}

std::optional<TimeUnit> parse_time_unit(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (TimeUnit unit : kAllTimeUnits) {
    if (lower == to_string(unit)) return unit;
  }
  if (lower == "nanoseconds") return TimeUnit::kNanoseconds;
  if (lower == "microseconds" || lower == "\xc2\xb5s") return TimeUnit::kMicroseconds;
  if (lower == "milliseconds") return TimeUnit::kMilliseconds;
  if (lower == "sec" || lower == "seconds") return TimeUnit::kSeconds;
  if (lower == "minutes" || lower == "minute") return TimeUnit::kMinutes;
  if (lower == "hours" || lower == "hour") return TimeUnit::kHours;
  if (lower == "days" || lower == "day") return TimeUnit::kDays;
  return std::nullopt;
}

double convert(double value, TimeUnit from, TimeUnit to) {
  if (from == to) return value;
  const auto from_ns = static_cast<double>(nanoseconds_per(from));
  const auto to_ns = static_cast<double>(nanoseconds_per(to));
  return value * from_ns / to_ns;
}

TimeUnit choose_time_unit(double max_value_ns) {
  if (!(max_value_ns > 0.0)) return TimeUnit::kHours;
  for (auto it = std::rbegin(kAllTimeUnits); it != std::rend(kAllTimeUnits); ++it) {
    const double scaled = max_value_ns / static_cast<double>(nanoseconds_per(*it));
    if (scaled >= 1.0 && scaled <= 1000.0) return *it;
  }
  return max_value_ns > 1000.0 ? TimeUnit::kDays : TimeUnit::kNanoseconds;
}

}  // namespace dpdfg
