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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpdfg {

// RFC 4180 style record reader: quoted fields may hold commas, doubled
// quotes and line breaks. CRLF and a leading UTF-8 BOM are accepted.
class CsvReader {
 public:
  explicit CsvReader(std::string_view text);

  // Next non-blank record, or nullopt at end of input.
  std::optional<std::vector<std::string>> next();

  // 1-based line on which the last returned record starts.
  std::size_t line_number() const { return line_number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_number_ = 0;
};

// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

}  // namespace dpdfg
