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

#include "event_log.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "csv_reader.hpp"
#include "error.hpp"

namespace dpdfg {
namespace {

void validate_activity(const Event& event, const std::string& where) {
  if (event.activity.empty()) {
    throw IngestError(where + ": empty activity label");
  }
  if (event.activity == kBoundaryActivity) {
    throw IngestError(where + ": activity label \"--\" is reserved");
  }
}

std::string read_all(std::istream& source) {
  return {std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
}

bool has_suffix(std::string_view s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  auto tail = s.substr(s.size() - suffix.size());
  return std::equal(tail.begin(), tail.end(), suffix.begin(), [](char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) == b;
  });
}

}  // namespace

EventLog EventLog::from_events(std::vector<Event> events) {
  EventLog log;
  for (std::size_t i = 0; i < events.size(); ++i) {
    validate_activity(events[i], "event " + std::to_string(i));
    if (events[i].case_id.empty()) {
      throw IngestError("event " + std::to_string(i) + ": empty case id");
    }
  }
  for (Event& event : events) {
    auto [it, inserted] = log.traces_.try_emplace(event.case_id);
    if (inserted) it->second.case_id = event.case_id;
    it->second.events.push_back(std::move(event));
  }
  for (auto& [id, trace] : log.traces_) {
    std::stable_sort(trace.events.begin(), trace.events.end(),
                     [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
  }
  return log;
}

std::size_t EventLog::event_count() const {
  std::size_t n = 0;
  for (const auto& [id, trace] : traces_) n += trace.events.size();
  return n;
}

EventLog parse_csv(std::string_view text, const ColumnMapping& mapping) {
  CsvReader reader(text);
  auto header = reader.next();
  if (!header) return EventLog{};

  auto find_column = [&](const std::string& name, const char* role) {
    auto it = std::find(header->begin(), header->end(), name);
    if (it == header->end()) {
      throw IngestError("row 1: missing " + std::string(role) + " column \"" + name + "\"");
    }
    return static_cast<std::size_t>(std::distance(header->begin(), it));
  };
  const std::size_t case_col = find_column(mapping.case_column, "case");
  const std::size_t activity_col = find_column(mapping.activity_column, "activity");
  const std::size_t ts_col = find_column(mapping.timestamp_column, "timestamp");

  std::optional<TimestampFormat> format;
  if (mapping.timestamp_format != TimestampFormat::kAuto) format = mapping.timestamp_format;

  std::vector<Event> events;
  while (auto row = reader.next()) {
    const std::string where = "row " + std::to_string(reader.line_number());
    if (row->size() != header->size()) {
      throw IngestError(where + ": expected " + std::to_string(header->size()) +
                        " fields, found " + std::to_string(row->size()));
    }
    Event event;
    event.case_id = (*row)[case_col];
    event.activity = (*row)[activity_col];
    const std::string& ts_text = (*row)[ts_col];
    if (event.case_id.empty()) throw IngestError(where + ": empty case id");
    validate_activity(event, where);

    if (!format) {
      format = parse_numeric_timestamp(ts_text, mapping.numeric_unit)
                   ? TimestampFormat::kNumeric
                   : TimestampFormat::kIso8601;
    }
    const auto ts = *format == TimestampFormat::kNumeric
                        ? parse_numeric_timestamp(ts_text, mapping.numeric_unit)
                        : parse_iso8601(ts_text);
    if (!ts) {
      throw IngestError(where + ": unparseable timestamp \"" + ts_text + "\"");
    }
    event.timestamp = *ts;

    for (std::size_t c = 0; c < header->size(); ++c) {
      if (c == case_col || c == activity_col || c == ts_col) continue;
      if ((*row)[c].empty()) continue;
      event.extra_attrs.emplace((*header)[c], std::move((*row)[c]));
    }
    events.push_back(std::move(event));
  }
  return EventLog::from_events(std::move(events));
}

EventLog parse_csv(std::istream& source, const ColumnMapping& mapping) {
  const std::string text = read_all(source);
  return parse_csv(std::string_view(text), mapping);
}

EventLog parse_xes(std::istream& source) {
  const std::string text = read_all(source);
  return parse_xes(std::string_view(text));
}

EventLog read_event_log_file(const std::string& path, const ColumnMapping& mapping) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  const std::string text = read_all(in);
  try {
    if (has_suffix(path, ".xes")) return parse_xes(std::string_view(text));
    return parse_csv(std::string_view(text), mapping);
  } catch (const IngestError& e) {
    throw IngestError(path + ": " + e.what());
  }
}

std::string write_canonical_csv(const EventLog& log) {
  std::set<std::string> extra_keys;
  for (const auto& [id, trace] : log.traces()) {
    for (const Event& e : trace.events) {
      for (const auto& [key, value] : e.extra_attrs) extra_keys.insert(key);
    }
  }
  std::ostringstream out;
  out << "case,activity,timestamp";
  for (const auto& key : extra_keys) out << ',' << csv_escape(key);
  out << '\n';
  for (const auto& [id, trace] : log.traces()) {
    for (const Event& e : trace.events) {
      out << csv_escape(e.case_id) << ',' << csv_escape(e.activity) << ','
          << format_iso8601(e.timestamp);
      for (const auto& key : extra_keys) {
        out << ',';
        if (auto it = e.extra_attrs.find(key); it != e.extra_attrs.end()) {
          out << csv_escape(it->second);
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace dpdfg
