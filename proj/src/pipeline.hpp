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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfg.hpp"
#include "risk_model.hpp"
#include "time_unit.hpp"
#include "utility_model.hpp"

namespace dpdfg {

// Fixed default root seed so that runs without --seed are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 20211;

// P1: risk target -> epsilon -> utility loss.
// P2: utility-loss target -> epsilon -> risk.
enum class DisclosureMode { kRiskToUtility, kUtilityToRisk };

std::string_view to_string(DisclosureMode mode);  // "P1" / "P2"
std::optional<DisclosureMode> parse_mode(std::string_view text);

struct DisclosureRequest {
  DisclosureMode mode = DisclosureMode::kRiskToUtility;
  AggregationKind aggregation = AggregationKind::kFrequency;
  std::optional<double> delta;  // P1 only
  std::optional<double> mape;   // P2 only
  double precision = 0.5;
  double beta = 0.05;
  std::uint64_t seed = kDefaultSeed;
  unsigned runs = 1;
  bool include_boundary_time = false;
  std::optional<TimeUnit> time_unit;  // nullopt: auto-scale

  // Throws InvalidArgument when the mode and the supplied target disagree,
  // DomainError when a parameter is out of range.
  void validate() const;
  RiskParams risk_params() const;
  UtilityParams utility_params() const;

  bool operator==(const DisclosureRequest&) const = default;
};

struct EdgeDisclosure {
  std::string source;
  std::string target;
  std::size_t occurrences = 0;
  double true_value = 0.0;
  Epsilon epsilon;
  double sensitivity = 1.0;
  double noise_scale = 0.0;
  double noisy_value = 0.0;     // first run, before post-processing
  double released_value = 0.0;  // first run, as published
  std::optional<double> ape;    // mean over runs; absent when true_value == 0
  double edge_delta = 0.0;
  bool degenerate = false;

  bool operator==(const EdgeDisclosure&) const = default;
};

struct DisclosureReport {
  static constexpr int kSchemaVersion = 1;

  DisclosureRequest request;
  TimeUnit time_unit = TimeUnit::kHours;
  std::vector<std::string> activities;
  std::vector<EdgeDisclosure> edges;  // sorted by (source, target)
  std::optional<double> mape;
  double smape = 0.0;
  double overall_delta = 0.0;
  Epsilon median_epsilon;
  std::vector<double> run_mape;
  std::vector<double> run_smape;
  double runtime_ms = 0.0;

  bool operator==(const DisclosureReport&) const = default;
};

struct AnnotatedDfg {
  Dfg dfg;
  AggregationKind kind = AggregationKind::kFrequency;
  std::map<EdgeKey, double> weights;
};

struct DisclosureResult {
  AnnotatedDfg annotated;
  DisclosureReport report;
};

// Dispatches on request.mode. Edges are processed on up to `threads` workers;
// the result is identical for every thread count.
DisclosureResult disclose(const Dfg& dfg, const DisclosureRequest& request,
                          unsigned threads = 1);
DisclosureResult disclose_p1(const Dfg& dfg, const DisclosureRequest& request,
                             unsigned threads = 1);
DisclosureResult disclose_p2(const Dfg& dfg, const DisclosureRequest& request,
                             unsigned threads = 1);

// Median over edges; unbounded values sort last.
Epsilon median_epsilon(std::vector<Epsilon> values);

}  // namespace dpdfg
