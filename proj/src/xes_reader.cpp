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

#include <expat.h>

#include <algorithm>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "event_log.hpp"

namespace dpdfg {
namespace {

// Typed attribute elements that carry key/value pairs.
bool is_attribute_element(std::string_view name) {
  return name == "string" || name == "date" || name == "int" || name == "float" ||
         name == "boolean" || name == "id" || name == "list" || name == "container";
}

struct XesState {
  std::vector<Event> events;
  std::optional<std::string> error;

  int depth = 0;
  // Depths at which the current trace/event elements were opened (0 = none).
  int trace_depth = 0;
  int event_depth = 0;

  std::size_t trace_index = 0;  // 0-based of the current trace
  std::size_t event_index = 0;  // 0-based, within the current trace
  std::size_t trace_event_begin = 0;
  std::optional<std::string> trace_name;

  Event current;
  bool has_name = false;
  bool has_timestamp = false;
};

std::string where_event(const XesState& s) {
  return "trace " + std::to_string(s.trace_index) + ", event " +
         std::to_string(s.event_index);
}

void fail(XML_Parser parser, XesState& s, std::string message) {
  if (!s.error) s.error = std::move(message);
  XML_StopParser(parser, XML_FALSE);
}

void on_start(void* user, const XML_Char* raw_name, const XML_Char** attrs) {
  auto* parser = static_cast<XML_Parser>(user);
  auto& s = *static_cast<XesState*>(XML_GetUserData(parser));
  if (s.error) return;
  ++s.depth;
  const std::string_view name = raw_name;

  if (name == "trace" && s.trace_depth == 0) {
    s.trace_depth = s.depth;
    s.event_index = 0;
    s.trace_event_begin = s.events.size();
    s.trace_name.reset();
    return;
  }
  if (name == "event" && s.trace_depth != 0 && s.event_depth == 0) {
    s.event_depth = s.depth;
    s.current = Event{};
    s.has_name = false;
    s.has_timestamp = false;
    return;
  }
  if (!is_attribute_element(name)) return;

  const char* key = nullptr;
  const char* value = nullptr;
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    if (std::strcmp(attrs[i], "key") == 0) key = attrs[i + 1];
    if (std::strcmp(attrs[i], "value") == 0) value = attrs[i + 1];
  }
  if (key == nullptr) return;

  // Only direct children of <event> / <trace> are read; nested attribute
  // values (meta-attributes, lists) are not interpreted.
  if (s.event_depth != 0 && s.depth == s.event_depth + 1) {
    const std::string_view k = key;
    if (k == "concept:name") {
      s.current.activity = value ? value : "";
      s.has_name = true;
    } else if (k == "time:timestamp") {
      const auto ts = parse_iso8601(value ? value : "");
      if (!ts) {
        fail(parser, s,
             where_event(s) + ": unparseable timestamp \"" + (value ? value : "") + "\"");
        return;
      }
      s.current.timestamp = *ts;
      s.has_timestamp = true;
    } else if (value != nullptr) {
      s.current.extra_attrs.insert_or_assign(std::string(k), value);
    }
  } else if (s.event_depth == 0 && s.trace_depth != 0 && s.depth == s.trace_depth + 1) {
    if (std::string_view(key) == "concept:name") s.trace_name = value ? value : "";
  }
}

void on_end(void* user, const XML_Char* raw_name) {
  auto* parser = static_cast<XML_Parser>(user);
  auto& s = *static_cast<XesState*>(XML_GetUserData(parser));
  if (s.error) return;
  const std::string_view name = raw_name;

  if (name == "event" && s.depth == s.event_depth) {
    if (!s.has_name || s.current.activity.empty()) {
      fail(parser, s, where_event(s) + ": missing concept:name");
      return;
    }
    if (!s.has_timestamp) {
      fail(parser, s, where_event(s) + ": missing timestamp");
      return;
    }
    if (s.current.activity == kBoundaryActivity) {
      fail(parser, s, where_event(s) + ": activity label \"--\" is reserved");
      return;
    }
    s.events.push_back(std::move(s.current));
    s.event_depth = 0;
    ++s.event_index;
  } else if (name == "trace" && s.depth == s.trace_depth) {
    if (!s.trace_name || s.trace_name->empty()) {
      fail(parser, s, "trace " + std::to_string(s.trace_index) + ": missing concept:name");
      return;
    }
    for (std::size_t i = s.trace_event_begin; i < s.events.size(); ++i) {
      s.events[i].case_id = *s.trace_name;
    }
    s.trace_depth = 0;
    ++s.trace_index;
  }
  --s.depth;
}

}  // namespace

EventLog parse_xes(std::string_view text) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate(nullptr), &XML_ParserFree);
  if (!parser) throw Error(ErrorCode::kInternal, "cannot allocate XML parser");

  XesState state;
  XML_SetUserData(parser.get(), &state);
  XML_UseParserAsHandlerArg(parser.get());
  XML_SetElementHandler(parser.get(), &on_start, &on_end);

  constexpr std::size_t kChunk = std::size_t{1} << 28;
  XML_Status status = XML_STATUS_OK;
  std::size_t offset = 0;
  do {
    const std::size_t n = std::min(kChunk, text.size() - offset);
    const bool last = offset + n == text.size();
    status = XML_Parse(parser.get(), text.data() + offset, static_cast<int>(n),
                       last ? XML_TRUE : XML_FALSE);
    offset += n;
  } while (status == XML_STATUS_OK && offset < text.size());
  if (state.error) throw IngestError(*state.error);
  if (status != XML_STATUS_OK) {
    throw IngestError("malformed XML at line " +
                      std::to_string(XML_GetCurrentLineNumber(parser.get())) + ": " +
                      XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  return EventLog::from_events(std::move(state.events));
}

}  // namespace dpdfg
