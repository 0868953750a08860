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

#include <cstdint>
#include <optional>
#include <string_view>

namespace dpdfg {

// Units a duration can be expressed in, ordered from finest to coarsest.
enum class TimeUnit {
  kNanoseconds,
  kMicroseconds,
  kMilliseconds,
  kSeconds,
  kMinutes,
  kHours,
  kDays,
};

inline constexpr TimeUnit kAllTimeUnits[] = {
    TimeUnit::kNanoseconds, TimeUnit::kMicroseconds, TimeUnit::kMilliseconds,
    TimeUnit::kSeconds,     TimeUnit::kMinutes,      TimeUnit::kHours,
    TimeUnit::kDays,
};

std::int64_t nanoseconds_per(TimeUnit unit);

// Short symbol: ns, us, ms, s, min, h, d.
std::string_view to_string(TimeUnit unit);

// Accepts the short symbols plus a few spelled-out aliases ("hours", "days").
std::optional<TimeUnit> parse_time_unit(std::string_view text);

// Converts a duration between units.
double convert(double value, TimeUnit from, TimeUnit to);

// Largest unit in which `max_value_ns` lies in [1, 1000]; clamps to days or
// nanoseconds when the value is outside the covered span. Zero maps to hours.
TimeUnit choose_time_unit(double max_value_ns);

}  // namespace dpdfg
