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
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "event_log.hpp"
#include "time_unit.hpp"

namespace dpdfg {

enum class AggregationKind { kFrequency, kSum, kMin, kMax, kAvg };

inline constexpr AggregationKind kAllAggregations[] = {
    AggregationKind::kFrequency, AggregationKind::kSum, AggregationKind::kMin,
    AggregationKind::kMax, AggregationKind::kAvg};

std::string_view to_string(AggregationKind kind);
std::optional<AggregationKind> parse_aggregation(std::string_view text);

inline bool is_time_aggregation(AggregationKind kind) {
  return kind != AggregationKind::kFrequency;
}

struct EdgeKey {
  std::string source;
  std::string target;

  auto operator<=>(const EdgeKey&) const = default;
};

// One directly-follows relation together with every time difference observed
// for it, in the unit of the owning Dfg.
struct DfgEdge {
  std::string source;
  std::string target;
  std::vector<double> durations;

  std::size_t frequency() const { return durations.size(); }
  EdgeKey key() const { return {source, target}; }
  // True for edges that start or end at the virtual case boundary node.
  bool is_boundary() const {
    return source == kBoundaryActivity || target == kBoundaryActivity;
  }

  bool operator==(const DfgEdge&) const = default;
};

struct Dfg {
  std::set<std::string> activities;
  std::map<EdgeKey, DfgEdge> edges;
  TimeUnit unit = TimeUnit::kHours;

  // Appends one occurrence, creating the edge on first use.
  void add_occurrence(const std::string& source, const std::string& target,
                      double duration);

  bool operator==(const Dfg&) const = default;
};

// Directly-follows graph with start/end edges to the "--" node; boundary
// occurrences carry duration 0. Durations are expressed in `unit`.
Dfg build_dfg(const EventLog& log, TimeUnit unit = TimeUnit::kHours);

// Same graph with every duration re-expressed in `unit`.
Dfg rescale(const Dfg& dfg, TimeUnit unit);

double aggregate(const DfgEdge& edge, AggregationKind kind);

// Largest possible guessing distance r for the edge: 1 for frequency, the
// maximum duration otherwise.
double edge_range(const DfgEdge& edge, AggregationKind kind);

// Edges published under `kind`. Time annotations drop boundary edges unless
// `include_boundary_time` is set; frequency keeps all of them.
Dfg disclosed_subgraph(const Dfg& dfg, AggregationKind kind, bool include_boundary_time);

// Auto-scaled unit for the maximum aggregated value across the edges.
TimeUnit auto_time_unit(const Dfg& dfg, AggregationKind kind);

}  // namespace dpdfg
