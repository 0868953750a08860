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

// dpdfg: build and publish differentially-private directly-follows graphs.
//
//   dpdfg anonymize --input log.csv --agg frequency --delta 0.4 --out dfg.json
//   dpdfg anonymize --input log.xes --agg max --mape 0.3 --format csv
//   dpdfg sweep --config sweep.json --out grid.csv
//   dpdfg inspect --input log.csv
//
// Exit status: 0 on success, 2 on usage errors, 1 on data or domain errors.

#include <CLI11.hpp>

#include <cerrno>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "dpdfg/dpdfg.h"

namespace {

constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct UsageError {
  std::string message;
};

struct DataError {
  std::string message;
};

void check(dpdfg_status status, const std::string& context = {}) {
  if (status == DPDFG_OK) return;
  std::string message = context.empty() ? "" : context + ": ";
  message += dpdfg_last_error();
  if (status == DPDFG_INVALID_ARGUMENT) throw UsageError{message};
  throw DataError{message};
}

struct LogDeleter {
  void operator()(dpdfg_log* p) const { dpdfg_log_free(p); }
};
struct GraphDeleter {
  void operator()(dpdfg_graph* p) const { dpdfg_graph_free(p); }
};
struct ReportDeleter {
  void operator()(dpdfg_report* p) const { dpdfg_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { dpdfg_string_free(p); }
};
using LogPtr = std::unique_ptr<dpdfg_log, LogDeleter>;
using GraphPtr = std::unique_ptr<dpdfg_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<dpdfg_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct InputOptions {
  std::string path;
  std::string format = "auto";
  std::string case_col = "case";
  std::string activity_col = "activity";
  std::string timestamp_col = "timestamp";
  std::string timestamp_format = "auto";
  std::string numeric_unit = "h";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input,-i", in.path, "Event log (CSV or XES)")->required();
  cmd->add_option("--input-format", in.format, "auto, csv or xes")->capture_default_str();
  cmd->add_option("--case-col", in.case_col, "CSV case id column")->capture_default_str();
  cmd->add_option("--activity-col", in.activity_col, "CSV activity column")
      ->capture_default_str();
  cmd->add_option("--timestamp-col", in.timestamp_col, "CSV timestamp column")
      ->capture_default_str();
  cmd->add_option("--timestamp-format", in.timestamp_format, "auto, iso8601 or numeric")
      ->capture_default_str();
  cmd->add_option("--numeric-unit", in.numeric_unit, "Unit of numeric timestamps")
      ->capture_default_str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DataError{"cannot open " + path};
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

LogPtr load_log(const InputOptions& in) {
  dpdfg_csv_options csv;
  dpdfg_csv_options_init(&csv);
  csv.case_column = in.case_col.c_str();
  csv.activity_column = in.activity_col.c_str();
  csv.timestamp_column = in.timestamp_col.c_str();
  check(dpdfg_parse_timestamp_format(in.timestamp_format.c_str(), &csv.timestamp_format),
        "--timestamp-format");
  check(dpdfg_parse_time_unit(in.numeric_unit.c_str(), &csv.numeric_unit), "--numeric-unit");
  if (csv.numeric_unit == DPDFG_UNIT_AUTO) throw UsageError{"--numeric-unit: auto not allowed"};

  dpdfg_log* raw = nullptr;
  if (in.format == "auto") {
    check(dpdfg_log_read_file(in.path.c_str(), &csv, &raw));
  } else if (in.format == "csv" || in.format == "xes") {
    const std::string data = read_file(in.path);
    const dpdfg_status st = in.format == "csv"
                                ? dpdfg_log_read_csv_buffer(data.data(), data.size(), &csv, &raw)
                                : dpdfg_log_read_xes_buffer(data.data(), data.size(), &raw);
    check(st, in.path);
  } else {
    throw UsageError{"--input-format: expected auto, csv or xes, got '" + in.format + "'"};
  }
  return LogPtr(raw);
}

void write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError{"cannot write " + path};
  f << text;
  if (!f) throw DataError{"write failed: " + path};
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError{std::string(origin) + ": expected an unsigned integer or 'random', got '" +
                     text + "'"};
  }
  return value;
}

struct AnonymizeOptions {
  InputOptions input;
  std::string agg = "frequency";
  std::optional<double> delta;
  std::optional<double> mape;
  double precision = 0.5;
  double beta = 0.05;
  std::string seed;
  unsigned runs = 1;
  unsigned threads = 1;
  std::string time_unit = "auto";
  bool include_boundary_time = false;
  std::string format = "json";
  std::string out;
  bool annotate_debug = false;
  bool timing = false;
};

int run_anonymize(const AnonymizeOptions& o) {
  if (o.delta && o.mape) throw UsageError{"--delta and --mape are mutually exclusive"};
  if (!o.delta && !o.mape) throw UsageError{"one of --delta (P1) or --mape (P2) is required"};

  dpdfg_request request;
  dpdfg_request_init(&request);
  request.mode = o.delta ? DPDFG_MODE_P1 : DPDFG_MODE_P2;
  check(dpdfg_parse_aggregation(o.agg.c_str(), &request.aggregation), "--agg");
  request.has_delta = o.delta.has_value();
  request.delta = o.delta.value_or(0.0);
  request.has_mape = o.mape.has_value();
  request.mape = o.mape.value_or(0.0);
  request.precision = o.precision;
  request.beta = o.beta;
  request.runs = o.runs;
  request.include_boundary_time = o.include_boundary_time;
  check(dpdfg_parse_time_unit(o.time_unit.c_str(), &request.time_unit), "--time-unit");
  if (!o.seed.empty()) {
    request.seed = parse_seed(o.seed, "--seed");
  } else if (const char* env = std::getenv("DPDFG_SEED"); env != nullptr && *env != '\0') {
    request.seed = parse_seed(env, "DPDFG_SEED");
  }

  dpdfg_format format;
  check(dpdfg_parse_format(o.format.c_str(), &format), "--format");

  LogPtr log = load_log(o.input);
  dpdfg_graph* graph_raw = nullptr;
  check(dpdfg_graph_build(log.get(), &graph_raw), o.input.path);
  GraphPtr graph(graph_raw);

  dpdfg_report* report_raw = nullptr;
  const dpdfg_status st = dpdfg_disclose(graph.get(), &request, o.threads, &report_raw);
  if (st == DPDFG_INVALID_ARGUMENT) throw UsageError{dpdfg_last_error()};
  check(st);
  ReportPtr report(report_raw);

  unsigned flags = 0;
  if (o.annotate_debug) flags |= DPDFG_EMIT_ANNOTATE_DEBUG;
  if (o.timing) flags |= DPDFG_EMIT_TIMING;
  char* text = nullptr;
  check(dpdfg_report_emit(report.get(), format, flags, &text));
  StringPtr owned(text);
  write_output(o.out, text);
  return 0;
}

struct SweepOptions {
  std::string config;
  std::string out;
  unsigned threads = 1;
};

int run_sweep(const SweepOptions& o) {
  const std::string config = read_file(o.config);
  const std::string base = std::filesystem::path(o.config).parent_path().string();
  char* csv = nullptr;
  const dpdfg_status st =
      dpdfg_sweep_run(config.c_str(), base.empty() ? "." : base.c_str(), o.threads, &csv);
  if (st != DPDFG_OK) throw DataError{o.config + ": " + dpdfg_last_error()};
  StringPtr owned(csv);
  write_output(o.out, csv);
  return 0;
}

struct InspectOptions {
  InputOptions input;
  std::string time_unit = "auto";
  std::string format = "text";
  std::string out;
};

int run_inspect(const InspectOptions& o) {
  if (o.format != "text" && o.format != "json") {
    throw UsageError{"--format: expected text or json, got '" + o.format + "'"};
  }
  dpdfg_time_unit unit;
  check(dpdfg_parse_time_unit(o.time_unit.c_str(), &unit), "--time-unit");
  LogPtr log = load_log(o.input);
  dpdfg_graph* graph_raw = nullptr;
  check(dpdfg_graph_build(log.get(), &graph_raw), o.input.path);
  GraphPtr graph(graph_raw);

  std::ostringstream head;
  char* summary = nullptr;
  check(dpdfg_graph_summary(graph.get(), unit, o.format == "json", &summary));
  StringPtr owned(summary);
  if (o.format == "text") {
    head << "traces: " << dpdfg_log_trace_count(log.get()) << "\n"
         << "events: " << dpdfg_log_event_count(log.get()) << "\n";
  }
  write_output(o.out, (head.str() + summary).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially-private directly-follows graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dpdfg_version()));

  AnonymizeOptions anon;
  CLI::App* anonymize = app.add_subcommand("anonymize", "Release a noisy DFG");
  add_input_options(anonymize, anon.input);
  anonymize->add_option("--agg", anon.agg, "frequency, sum, min, max or avg")
      ->capture_default_str();
  anonymize->add_option("--delta", anon.delta, "Guessing-advantage target (P1)");
  anonymize->add_option("--mape", anon.mape, "MAPE target (P2)");
  anonymize->add_option("--precision,-p", anon.precision, "Guess precision, fraction of range")
      ->capture_default_str();
  anonymize->add_option("--beta", anon.beta, "Noise tail probability (P2)")
      ->capture_default_str();
  anonymize->add_option("--seed", anon.seed,
                        "Root seed or 'random' (default: $DPDFG_SEED, else " +
                            std::to_string(dpdfg_default_seed()) + ")");
  anonymize->add_option("--runs", anon.runs, "Noise repetitions averaged into APE/MAPE")
      ->capture_default_str();
  anonymize->add_option("--threads,-j", anon.threads, "Worker threads")->capture_default_str();
  anonymize->add_option("--time-unit", anon.time_unit, "Unit of time weights, or auto")
      ->capture_default_str();
  anonymize->add_flag("--include-boundary-time", anon.include_boundary_time,
                      "Publish time weights on start/end edges");
  anonymize->add_option("--format,-f", anon.format, "json, csv or dot")->capture_default_str();
  anonymize->add_option("--out,-o", anon.out, "Output file (default: stdout)");
  anonymize->add_flag("--annotate-debug", anon.annotate_debug, "DOT: epsilon and APE on edges");
  anonymize->add_flag("--timing", anon.timing, "JSON: include runtime_ms");

  SweepOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--config,-c", sweep_opts.config, "Sweep configuration (JSON)")->required();
  sweep->add_option("--out,-o", sweep_opts.out, "Grid CSV (default: stdout)");
  sweep->add_option("--threads,-j", sweep_opts.threads, "Worker threads")
      ->capture_default_str();

  InspectOptions insp;
  CLI::App* inspect = app.add_subcommand("inspect", "Print DFG statistics");
  add_input_options(inspect, insp.input);
  inspect->add_option("--time-unit", insp.time_unit, "Unit of time statistics, or auto")
      ->capture_default_str();
  inspect->add_option("--format,-f", insp.format, "text or json")->capture_default_str();
  inspect->add_option("--out,-o", insp.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*anonymize) return run_anonymize(anon);
    if (*sweep) return run_sweep(sweep_opts);
    if (*inspect) return run_inspect(insp);
  } catch (const UsageError& e) {
    std::cerr << "dpdfg: " << e.message << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "dpdfg: " << e.message << "\n";
    return kExitData;
  }
  return kExitUsage;
}
