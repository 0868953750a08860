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

#include "sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "csv_reader.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "report_io.hpp"

namespace dpdfg {
namespace {

using Json = nlohmann::json;

struct Cell {
  std::size_t log = 0;
  AggregationKind aggregation = AggregationKind::kFrequency;
  DisclosureMode mode = DisclosureMode::kRiskToUtility;
  double parameter = 0.0;
};

struct LoadedLog {
  std::optional<Dfg> dfg;
  std::string error;
};

double mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double standard_error(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  const double sd = std::sqrt(ss / static_cast<double>(v.size() - 1));
  return sd / std::sqrt(static_cast<double>(v.size()));
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

SyntheticLogSpec synthetic_from_json(const Json& j) {
  SyntheticLogSpec s;
  if (j.contains("profile")) {
    const auto base = synthetic_profile(j.at("profile").get<std::string>());
    if (!base) throw InvalidArgument("unknown synthetic profile " + j.at("profile").dump());
    s = *base;
  }
  s.trace_count = j.value("trace_count", s.trace_count);
  s.alphabet_size = j.value("alphabet_size", s.alphabet_size);
  s.variant_count = j.value("variant_count", s.variant_count);
  if (j.contains("distribution")) {
    const auto d = j.at("distribution").get<std::string>();
    if (d == "uniform") {
      s.distribution = VariantDistribution::kUniform;
    } else if (d == "zipf") {
      s.distribution = VariantDistribution::kZipf;
    } else {
      throw InvalidArgument("unknown variant distribution " + d);
    }
  }
  s.zipf_exponent = j.value("zipf_exponent", s.zipf_exponent);
  s.duration_mu = j.value("duration_mu", s.duration_mu);
  s.duration_sigma = j.value("duration_sigma", s.duration_sigma);
  s.outlier_rate = j.value("outlier_rate", s.outlier_rate);
  s.outlier_factor = j.value("outlier_factor", s.outlier_factor);
  return s;
}

SweepLog log_from_json(Json j, const std::string& base_dir) {
  SweepLog log;
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (auto profile = synthetic_profile(text)) {
      log.name = text;
      log.synthetic = *profile;
      return log;
    }
    j = Json{{"path", text}};
  }
  if (j.contains("path")) {
    std::filesystem::path p = j.at("path").get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    log.path = p.string();
    log.name = j.value("name", std::filesystem::path(*log.path).stem().string());
    log.mapping.case_column = j.value("case_column", log.mapping.case_column);
    log.mapping.activity_column = j.value("activity_column", log.mapping.activity_column);
    log.mapping.timestamp_column = j.value("timestamp_column", log.mapping.timestamp_column);
  } else if (j.contains("synthetic")) {
    const Json& s = j.at("synthetic");
    log.synthetic = s.is_string() ? synthetic_from_json(Json{{"profile", s}})
                                  : synthetic_from_json(s);
    log.name = j.value("name", s.is_string() ? s.get<std::string>() : std::string("synthetic"));
  } else {
    throw InvalidArgument("sweep log entry needs \"path\" or \"synthetic\"");
  }
  return log;
}

LoadedLog load(const SweepLog& entry, std::uint64_t seed) {
  LoadedLog out;
  try {
    const EventLog log = entry.path ? read_event_log_file(*entry.path, entry.mapping)
                                    : generate_log(*entry.synthetic, seed);
    out.dfg = build_dfg(log, TimeUnit::kNanoseconds);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

std::string csv_number(double v) { return format_number(v); }

}  // namespace

void SweepSpec::validate() const {
  if (logs.empty()) throw InvalidArgument("sweep needs at least one log");
  if (aggregations.empty()) throw InvalidArgument("sweep needs at least one aggregation");
  if (deltas.empty() && mapes.empty()) {
    throw InvalidArgument("sweep needs a non-empty delta or mape grid");
  }
  if (runs == 0) throw InvalidArgument("runs must be at least 1");
  for (const auto& log : logs) {
    if (!log.path && !log.synthetic) throw InvalidArgument("log " + log.name + " has no source");
  }
}

SweepSpec parse_sweep_config(std::string_view json_text, const std::string& base_dir) {
  SweepSpec spec;
  try {
    const Json j = Json::parse(json_text);
    for (const Json& entry : j.at("logs")) spec.logs.push_back(log_from_json(entry, base_dir));
    if (j.contains("deltas")) spec.deltas = j.at("deltas").get<std::vector<double>>();
    if (j.contains("mapes")) spec.mapes = j.at("mapes").get<std::vector<double>>();
    if (j.contains("aggregations")) {
      spec.aggregations.clear();
      for (const auto& name : j.at("aggregations").get<std::vector<std::string>>()) {
        const auto kind = parse_aggregation(name);
        if (!kind) throw InvalidArgument("unknown aggregation " + name);
        spec.aggregations.push_back(*kind);
      }
    }
    spec.runs = j.value("runs", spec.runs);
    spec.seed = j.value("seed", spec.seed);
    spec.precision = j.value("precision", spec.precision);
    spec.beta = j.value("beta", spec.beta);
    if (j.contains("time_unit")) {
      const auto name = j.at("time_unit").get<std::string>();
      if (name != "auto") {
        spec.time_unit = parse_time_unit(name);
        if (!spec.time_unit) throw InvalidArgument("unknown time unit " + name);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed sweep config: ") + e.what());
  }
  spec.validate();
  return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();

  std::vector<LoadedLog> loaded(spec.logs.size());
  parallel_for(spec.logs.size(), threads,
               [&](std::size_t i) { loaded[i] = load(spec.logs[i], spec.seed); });

  std::vector<Cell> cells;
  for (std::size_t l = 0; l < spec.logs.size(); ++l) {
    for (AggregationKind kind : spec.aggregations) {
      for (double d : spec.deltas) cells.push_back({l, kind, DisclosureMode::kRiskToUtility, d});
      for (double m : spec.mapes) cells.push_back({l, kind, DisclosureMode::kUtilityToRisk, m});
    }
  }

  std::vector<SweepRow> rows(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    const Cell& cell = cells[i];
    SweepRow& row = rows[i];
    row.log = spec.logs[cell.log].name;
    row.aggregation = cell.aggregation;
    row.mode = cell.mode;
    row.parameter = cell.parameter;
    row.runs = spec.runs;

    const LoadedLog& source = loaded[cell.log];
    if (!source.dfg) {
      row.error = source.error;
      return;
    }
    DisclosureRequest request;
    request.mode = cell.mode;
    request.aggregation = cell.aggregation;
    if (cell.mode == DisclosureMode::kRiskToUtility) {
      request.delta = cell.parameter;
    } else {
      request.mape = cell.parameter;
    }
    request.precision = spec.precision;
    request.beta = spec.beta;
    request.seed = spec.seed;
    request.runs = spec.runs;
    request.time_unit = spec.time_unit;

    const auto started = std::chrono::steady_clock::now();
    try {
      const DisclosureReport report = disclose(*source.dfg, request).report;
      row.edges = report.edges.size();
      row.median_epsilon = report.median_epsilon;
      if (report.mape) {
        row.mape = report.mape;
        row.mape_se = standard_error(report.run_mape);
      }
      row.smape = report.smape;
      row.smape_se = standard_error(report.run_smape);
      std::vector<double> deltas;
      for (const auto& e : report.edges) deltas.push_back(e.edge_delta);
      row.median_delta = median(deltas);
      row.max_delta = report.overall_delta;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - started)
                      .count();
  });
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) {
    out << csv_escape(r.log) << ',' << to_string(r.aggregation) << ',' << to_string(r.mode)
        << ',' << csv_number(r.parameter) << ',';
    if (!r.error.empty()) {
      out << ",,,,,,,,,," << csv_escape("error: " + r.error) << '\n';
      continue;
    }
    out << r.edges << ',' << r.runs << ',' << csv_number(r.median_epsilon.value()) << ','
        << (r.mape ? csv_number(*r.mape) : "") << ',' << (r.mape ? csv_number(r.mape_se) : "")
        << ',' << csv_number(r.smape) << ',' << csv_number(r.smape_se) << ','
        << csv_number(r.median_delta) << ',' << csv_number(r.max_delta) << ','
        << csv_number(r.wall_ms) << ",\n";
  }
  return out.str();
}

}  // namespace dpdfg
