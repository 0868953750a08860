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

#include <string>
#include <string_view>

#include "dfg.hpp"
#include "pipeline.hpp"

namespace dpdfg {

enum class ReportFormat { kJson, kCsv, kDot };

std::optional<ReportFormat> parse_report_format(std::string_view text);

struct EmitOptions {
  bool annotate_debug = false;  // DOT: add epsilon / APE to edge labels
  bool include_timing = false;  // JSON: add runtime_ms (not reproducible)
};

std::string emit(const DisclosureReport& report, ReportFormat format,
                 const EmitOptions& options = {});

std::string report_to_json(const DisclosureReport& report, bool include_timing = false);
// Inverse of report_to_json. Throws InvalidArgument on schema mismatch.
DisclosureReport report_from_json(std::string_view text);

// source,target,true,epsilon,released,ape,delta
std::string report_to_csv(const DisclosureReport& report);
std::string report_to_dot(const DisclosureReport& report, bool annotate_debug = false);

// Graph statistics for `inspect`: per-edge frequency and the four time
// aggregations, in `unit`.
std::string dfg_summary_json(const Dfg& dfg, TimeUnit unit);
std::string dfg_summary_text(const Dfg& dfg, TimeUnit unit);

// Shortest round-trip decimal form; "unbounded" for +infinity.
std::string format_number(double value);

}  // namespace dpdfg
