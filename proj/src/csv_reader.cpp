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

#include "csv_reader.hpp"

#include "error.hpp"

namespace dpdfg {

CsvReader::CsvReader(std::string_view text) : text_(text) {
  if (text_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
}

std::optional<std::vector<std::string>> CsvReader::next() {
  while (pos_ < text_.size()) {
    const std::size_t start_line = line_;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool quoted_field = false;
    bool record_done = false;

    while (pos_ < text_.size() && !record_done) {
      const char c = text_[pos_++];
      if (in_quotes) {
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            field.push_back('"');
            ++pos_;
          } else {
            in_quotes = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
        continue;
      }
      switch (c) {
        case '"':
          if (field.empty() && !quoted_field) {
            in_quotes = true;
            quoted_field = true;
          } else {
            field.push_back(c);
          }
          break;
        case ',':
          fields.push_back(std::move(field));
          field.clear();
          quoted_field = false;
          break;
        case '\r':
          if (pos_ < text_.size() && text_[pos_] == '\n') ++pos_;
          ++line_;
          record_done = true;
          break;
        case '\n':
          ++line_;
          record_done = true;
          break;
        default:
          field.push_back(c);
      }
    }
    if (in_quotes) {
      throw IngestError("row " + std::to_string(start_line) +
                        ": unterminated quoted field");
    }
    fields.push_back(std::move(field));

    const bool blank = fields.size() == 1 && fields.front().empty() && !quoted_field;
    if (blank) continue;
    line_number_ = start_line;
    return fields;
  }
  return std::nullopt;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace dpdfg
