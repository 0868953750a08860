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

#include "dfg.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace dpdfg {

std::string_view to_string(AggregationKind kind) {
  switch (kind) {
    case AggregationKind::kFrequency:
      return "frequency";
    case AggregationKind::kSum:
      return "sum";
    case AggregationKind::kMin:
      return "min";
    case AggregationKind::kMax:
      return "max";
    case AggregationKind::kAvg:
      return "avg";
  }
  return "?";
}

std::optional<AggregationKind> parse_aggregation(std::string_view text) {
  for (AggregationKind kind : kAllAggregations) {
    if (text == to_string(kind)) return kind;
  }
  if (text == "freq" || text == "count") return AggregationKind::kFrequency;
  if (text == "average" || text == "mean") return AggregationKind::kAvg;
  return std::nullopt;
}

void Dfg::add_occurrence(const std::string& source, const std::string& target,
                         double duration) {
  auto [it, inserted] = edges.try_emplace(EdgeKey{source, target});
  if (inserted) {
    it->second.source = source;
    it->second.target = target;
  }
  it->second.durations.push_back(duration);
}

Dfg build_dfg(const EventLog& log, TimeUnit unit) {
  Dfg dfg;
  dfg.unit = unit;
  const std::string boundary(kBoundaryActivity);
  const auto unit_ns = static_cast<double>(nanoseconds_per(unit));

  for (const auto& [case_id, trace] : log.traces()) {
    if (trace.events.empty()) {
      throw DomainError("trace \"" + case_id + "\" has no events");
    }
    const auto& events = trace.events;
    for (const Event& e : events) dfg.activities.insert(e.activity);

    dfg.add_occurrence(boundary, events.front().activity, 0.0);
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
      const std::int64_t gap = events[i + 1].timestamp.ns - events[i].timestamp.ns;
      if (gap < 0) {
        throw DomainError("trace \"" + case_id + "\": negative time difference between events " +
                          std::to_string(i) + " and " + std::to_string(i + 1));
      }
      dfg.add_occurrence(events[i].activity, events[i + 1].activity,
                         static_cast<double>(gap) / unit_ns);
    }
    dfg.add_occurrence(events.back().activity, boundary, 0.0);
  }
  return dfg;
}

Dfg rescale(const Dfg& dfg, TimeUnit unit) {
  Dfg out = dfg;
  out.unit = unit;
  if (unit == dfg.unit) return out;
  for (auto& [key, edge] : out.edges) {
    for (double& d : edge.durations) d = convert(d, dfg.unit, unit);
  }
  return out;
}

double aggregate(const DfgEdge& edge, AggregationKind kind) {
  const auto& d = edge.durations;
  if (d.empty()) throw DomainError("edge (" + edge.source + "," + edge.target + ") is empty");
  switch (kind) {
    case AggregationKind::kFrequency:
      return static_cast<double>(d.size());
    case AggregationKind::kSum:
      return std::accumulate(d.begin(), d.end(), 0.0);
    case AggregationKind::kMin:
      return *std::min_element(d.begin(), d.end());
    case AggregationKind::kMax:
      return *std::max_element(d.begin(), d.end());
    case AggregationKind::kAvg:
      return std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
  }
  return 0.0;
}

double edge_range(const DfgEdge& edge, AggregationKind kind) {
  if (kind == AggregationKind::kFrequency) return 1.0;
  return aggregate(edge, AggregationKind::kMax);
}

Dfg disclosed_subgraph(const Dfg& dfg, AggregationKind kind, bool include_boundary_time) {
  if (!is_time_aggregation(kind) || include_boundary_time) return dfg;
  Dfg out;
  out.activities = dfg.activities;
  out.unit = dfg.unit;
  for (const auto& [key, edge] : dfg.edges) {
    if (!edge.is_boundary()) out.edges.emplace(key, edge);
  }
  return out;
}

TimeUnit auto_time_unit(const Dfg& dfg, AggregationKind kind) {
  if (!is_time_aggregation(kind)) return dfg.unit;
  double max_value = 0.0;
  for (const auto& [key, edge] : dfg.edges) {
    max_value = std::max(max_value, aggregate(edge, kind));
  }
  return choose_time_unit(max_value * static_cast<double>(nanoseconds_per(dfg.unit)));
}

}  // namespace dpdfg
