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
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "time_unit.hpp"
#include "timestamp.hpp"

namespace dpdfg {

// Label reserved for the virtual start/end node of every case.
inline constexpr std::string_view kBoundaryActivity = "--";

struct Event {
  std::string case_id;
  std::string activity;
  Timestamp timestamp;
  std::map<std::string, std::string> extra_attrs;

  bool operator==(const Event&) const = default;
};

// Events of one case, ascending by timestamp; ties keep source order.
struct Trace {
  std::string case_id;
  std::vector<Event> events;

  bool operator==(const Trace&) const = default;
};

class EventLog {
 public:
  EventLog() = default;

  // Groups events by case id and sorts each case stably by timestamp.
  // Rejects empty and reserved activity labels.
  static EventLog from_events(std::vector<Event> events);

  const std::map<std::string, Trace>& traces() const { return traces_; }
  std::size_t trace_count() const { return traces_.size(); }
  std::size_t event_count() const;
  bool empty() const { return traces_.empty(); }

  bool operator==(const EventLog&) const = default;

 private:
  std::map<std::string, Trace> traces_;
};

enum class TimestampFormat {
  kAuto,     // numeric if the first data row parses as a number, else ISO-8601
  kIso8601,
  kNumeric,  // decimal count of `numeric_unit` since the epoch
};

struct ColumnMapping {
  std::string case_column = "case";
  std::string activity_column = "activity";
  std::string timestamp_column = "timestamp";
  TimestampFormat timestamp_format = TimestampFormat::kAuto;
  TimeUnit numeric_unit = TimeUnit::kHours;
};

// Comma separated, first row is the header. Columns other than the mapped
// three land in extra_attrs; empty extra cells are dropped.
EventLog parse_csv(std::istream& source, const ColumnMapping& mapping = {});
EventLog parse_csv(std::string_view text, const ColumnMapping& mapping = {});

// XES subset: <trace> with concept:name, <event> with concept:name and
// time:timestamp. Other top-level event attributes (lifecycle:transition,
// org:resource, ...) are kept verbatim in extra_attrs.
EventLog parse_xes(std::istream& source);
EventLog parse_xes(std::string_view text);

// Reads a file, picking the parser by extension (.xes / anything else = CSV).
EventLog read_event_log_file(const std::string& path, const ColumnMapping& mapping = {});

// Canonical CSV: case,activity,timestamp followed by the sorted union of the
// extra attribute keys. Timestamps are rendered with format_iso8601.
std::string write_canonical_csv(const EventLog& log);

}  // namespace dpdfg
