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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "event_log.hpp"

namespace dpdfg {

enum class VariantDistribution { kUniform, kZipf };

// Parameters of a generated log. Durations between consecutive events are
// lognormal (in hours); each edge gets its own location shift so edges differ.
struct SyntheticLogSpec {
  std::size_t trace_count = 100;
  std::size_t alphabet_size = 5;
  std::size_t variant_count = 4;
  VariantDistribution distribution = VariantDistribution::kUniform;
  double zipf_exponent = 1.0;
  double duration_mu = 1.0;     // log-hours
  double duration_sigma = 0.5;
  double outlier_rate = 0.0;    // chance that one gap is stretched
  double outlier_factor = 50.0;

  // Throws InvalidArgument ("empty log" for trace_count == 0).
  void validate() const;

  bool operator==(const SyntheticLogSpec&) const = default;
};

// Events whose incoming gap was stretched carry this attribute set to "1".
inline constexpr std::string_view kOutlierAttribute = "synthetic:outlier";

EventLog generate_log(const SyntheticLogSpec& spec, std::uint64_t seed);

// "simple", "skewed" and "unique".
std::optional<SyntheticLogSpec> synthetic_profile(std::string_view name);

}  // namespace dpdfg
