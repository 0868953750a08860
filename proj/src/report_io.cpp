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

#include "report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "csv_reader.hpp"
#include "error.hpp"

namespace dpdfg {
namespace {

using Json = nlohmann::ordered_json;

Json epsilon_to_json(Epsilon e) {
  if (e.is_unbounded()) return "unbounded";
  return e.value();
}

Epsilon epsilon_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "unbounded") {
      throw InvalidArgument("epsilon: expected a number or \"unbounded\"");
    }
    return Epsilon::unbounded();
  }
  return Epsilon(j.get<double>());
}

template <typename T>
Json optional_to_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<double> optional_double(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

Json request_to_json(const DisclosureRequest& r) {
  Json j;
  j["mode"] = std::string(to_string(r.mode));
  j["aggregation"] = std::string(to_string(r.aggregation));
  j["delta"] = optional_to_json(r.delta);
  j["mape"] = optional_to_json(r.mape);
  j["precision"] = r.precision;
  j["beta"] = r.beta;
  j["seed"] = r.seed;
  j["runs"] = r.runs;
  j["include_boundary_time"] = r.include_boundary_time;
  j["time_unit"] = r.time_unit ? Json(std::string(to_string(*r.time_unit))) : Json("auto");
  return j;
}

DisclosureRequest request_from_json(const Json& j) {
  DisclosureRequest r;
  const auto mode = parse_mode(j.at("mode").get<std::string>());
  const auto kind = parse_aggregation(j.at("aggregation").get<std::string>());
  if (!mode || !kind) throw InvalidArgument("request: unknown mode or aggregation");
  r.mode = *mode;
  r.aggregation = *kind;
  r.delta = optional_double(j, "delta");
  r.mape = optional_double(j, "mape");
  r.precision = j.at("precision").get<double>();
  r.beta = j.at("beta").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.runs = j.at("runs").get<unsigned>();
  r.include_boundary_time = j.at("include_boundary_time").get<bool>();
  const auto unit = j.at("time_unit").get<std::string>();
  if (unit != "auto") {
    r.time_unit = parse_time_unit(unit);
    if (!r.time_unit) throw InvalidArgument("request: unknown time unit " + unit);
  }
  return r;
}

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string short_number(double v) {
  if (std::isinf(v)) return "unbounded";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::kJson;
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "dot") return ReportFormat::kDot;
  return std::nullopt;
}

std::string format_number(double value) {
  if (std::isinf(value) && value > 0) return "unbounded";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string report_to_json(const DisclosureReport& report, bool include_timing) {
  Json j;
  j["schema_version"] = DisclosureReport::kSchemaVersion;
  j["request"] = request_to_json(report.request);
  j["time_unit"] = std::string(to_string(report.time_unit));
  j["activities"] = report.activities;
  j["mape"] = optional_to_json(report.mape);
  j["smape"] = report.smape;
  j["overall_delta"] = report.overall_delta;
  j["median_epsilon"] = epsilon_to_json(report.median_epsilon);
  j["run_mape"] = report.run_mape;
  j["run_smape"] = report.run_smape;
  if (include_timing) j["runtime_ms"] = report.runtime_ms;

  Json edges = Json::array();
  for (const EdgeDisclosure& e : report.edges) {
    Json row;
    row["source"] = e.source;
    row["target"] = e.target;
    row["occurrences"] = e.occurrences;
    row["true_value"] = e.true_value;
    row["epsilon"] = epsilon_to_json(e.epsilon);
    row["sensitivity"] = e.sensitivity;
    row["noise_scale"] = e.noise_scale;
    row["noisy_value"] = e.noisy_value;
    row["released_value"] = e.released_value;
    row["ape"] = optional_to_json(e.ape);
    row["edge_delta"] = e.edge_delta;
    row["degenerate"] = e.degenerate;
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

DisclosureReport report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    if (j.at("schema_version").get<int>() != DisclosureReport::kSchemaVersion) {
      throw InvalidArgument("unsupported report schema version");
    }
    DisclosureReport r;
    r.request = request_from_json(j.at("request"));
    const auto unit = parse_time_unit(j.at("time_unit").get<std::string>());
    if (!unit) throw InvalidArgument("report: unknown time unit");
    r.time_unit = *unit;
    r.activities = j.at("activities").get<std::vector<std::string>>();
    r.mape = optional_double(j, "mape");
    r.smape = j.at("smape").get<double>();
    r.overall_delta = j.at("overall_delta").get<double>();
    r.median_epsilon = epsilon_from_json(j.at("median_epsilon"));
    r.run_mape = j.at("run_mape").get<std::vector<double>>();
    r.run_smape = j.at("run_smape").get<std::vector<double>>();
    if (j.contains("runtime_ms")) r.runtime_ms = j.at("runtime_ms").get<double>();
    for (const Json& row : j.at("edges")) {
      EdgeDisclosure e;
      e.source = row.at("source").get<std::string>();
      e.target = row.at("target").get<std::string>();
      e.occurrences = row.at("occurrences").get<std::size_t>();
      e.true_value = row.at("true_value").get<double>();
      e.epsilon = epsilon_from_json(row.at("epsilon"));
      e.sensitivity = row.at("sensitivity").get<double>();
      e.noise_scale = row.at("noise_scale").get<double>();
      e.noisy_value = row.at("noisy_value").get<double>();
      e.released_value = row.at("released_value").get<double>();
      e.ape = optional_double(row, "ape");
      e.edge_delta = row.at("edge_delta").get<double>();
      e.degenerate = row.at("degenerate").get<bool>();
      r.edges.push_back(std::move(e));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
  }
}

std::string report_to_csv(const DisclosureReport& report) {
  std::ostringstream out;
  out << "source,target,true,epsilon,released,ape,delta\n";
  for (const EdgeDisclosure& e : report.edges) {
    out << csv_escape(e.source) << ',' << csv_escape(e.target) << ','
        << format_number(e.true_value) << ',' << format_number(e.epsilon.value()) << ','
        << format_number(e.released_value) << ',' << (e.ape ? format_number(*e.ape) : "")
        << ',' << format_number(e.edge_delta) << '\n';
  }
  return out.str();
}

std::string report_to_dot(const DisclosureReport& report, bool annotate_debug) {
  std::ostringstream out;
  out << "digraph dfg {\n";
  out << "  rankdir=LR;\n";
  out << "  " << dot_id(kBoundaryActivity) << " [shape=circle];\n";
  for (const auto& a : report.activities) out << "  " << dot_id(a) << " [shape=box];\n";
  for (const EdgeDisclosure& e : report.edges) {
    std::string label = short_number(e.released_value);
    if (annotate_debug) {
      label += "\neps=" + short_number(e.epsilon.value());
      label += "\nAPE=" + (e.ape ? short_number(*e.ape) : std::string("n/a"));
      label += "\ndelta=" + short_number(e.edge_delta);
    }
    out << "  " << dot_id(e.source) << " -> " << dot_id(e.target)
        << " [label=" << dot_id(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string emit(const DisclosureReport& report, ReportFormat format,
                 const EmitOptions& options) {
  switch (format) {
    case ReportFormat::kJson:
      return report_to_json(report, options.include_timing);
    case ReportFormat::kCsv:
      return report_to_csv(report);
    case ReportFormat::kDot:
      return report_to_dot(report, options.annotate_debug);
  }
  return {};
}

std::string dfg_summary_json(const Dfg& input, TimeUnit unit) {
  const Dfg dfg = rescale(input, unit);
  Json j;
  j["time_unit"] = std::string(to_string(unit));
  j["activities"] = std::vector<std::string>(dfg.activities.begin(), dfg.activities.end());
  Json edges = Json::array();
  for (const auto& [key, edge] : dfg.edges) {
    Json row;
    row["source"] = edge.source;
    row["target"] = edge.target;
    row["boundary"] = edge.is_boundary();
    for (AggregationKind kind : kAllAggregations) {
      row[std::string(to_string(kind))] = aggregate(edge, kind);
    }
    edges.push_back(std::move(row));
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

std::string dfg_summary_text(const Dfg& input, TimeUnit unit) {
  const Dfg dfg = rescale(input, unit);
  std::ostringstream out;
  out << "activities: " << dfg.activities.size() << "\n";
  out << "edges: " << dfg.edges.size() << "\n";
  out << "time unit: " << to_string(unit) << "\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-32s %10s %12s %12s %12s %12s\n", "edge", "frequency",
                "sum", "min", "max", "avg");
  out << line;
  for (const auto& [key, edge] : dfg.edges) {
    const std::string name = "(" + edge.source + "," + edge.target + ")";
    std::snprintf(line, sizeof line, "%-32s %10zu %12.6g %12.6g %12.6g %12.6g\n",
                  name.c_str(), edge.frequency(), aggregate(edge, AggregationKind::kSum),
                  aggregate(edge, AggregationKind::kMin),
                  aggregate(edge, AggregationKind::kMax),
                  aggregate(edge, AggregationKind::kAvg));
    out << line;
  }
  return out.str();
}

}  // namespace dpdfg
