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

#include "dpdfg/dpdfg.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <string_view>

#include "dfg.hpp"
#include "error.hpp"
#include "event_log.hpp"
#include "pipeline.hpp"
#include "report_io.hpp"
#include "sweep.hpp"
#include "synthetic.hpp"

struct dpdfg_log {
  dpdfg::EventLog log;
};

struct dpdfg_graph {
  dpdfg::Dfg dfg;  // durations in nanoseconds
};

struct dpdfg_report {
  dpdfg::DisclosureReport report;
};

namespace {

thread_local std::string g_last_error;

dpdfg_status status_for(dpdfg::ErrorCode code) {
  switch (code) {
    case dpdfg::ErrorCode::kInvalidArgument:
      return DPDFG_INVALID_ARGUMENT;
    case dpdfg::ErrorCode::kIngest:
      return DPDFG_INGEST_ERROR;
    case dpdfg::ErrorCode::kDomain:
      return DPDFG_DOMAIN_ERROR;
    case dpdfg::ErrorCode::kIo:
      return DPDFG_IO_ERROR;
    case dpdfg::ErrorCode::kInternal:
      return DPDFG_INTERNAL_ERROR;
  }
  return DPDFG_INTERNAL_ERROR;
}

dpdfg_status fail(dpdfg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
dpdfg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return DPDFG_OK;
  } catch (const dpdfg::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DPDFG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(DPDFG_INTERNAL_ERROR, e.what());
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw dpdfg::InvalidArgument(std::string(name) + " must not be NULL");
}

char* copy_string(std::string_view s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

dpdfg::TimeUnit to_unit(dpdfg_time_unit unit) {
  if (unit < DPDFG_UNIT_NANOSECONDS || unit > DPDFG_UNIT_DAYS) {
    throw dpdfg::InvalidArgument("time unit out of range");
  }
  return static_cast<dpdfg::TimeUnit>(unit);
}

dpdfg::AggregationKind to_kind(dpdfg_aggregation agg) {
  if (agg < DPDFG_AGG_FREQUENCY || agg > DPDFG_AGG_AVG) {
    throw dpdfg::InvalidArgument("aggregation out of range");
  }
  return static_cast<dpdfg::AggregationKind>(agg);
}

dpdfg::ColumnMapping to_mapping(const dpdfg_csv_options* options) {
  dpdfg::ColumnMapping m;
  if (options == nullptr) return m;
  if (options->case_column) m.case_column = options->case_column;
  if (options->activity_column) m.activity_column = options->activity_column;
  if (options->timestamp_column) m.timestamp_column = options->timestamp_column;
  switch (options->timestamp_format) {
    case DPDFG_TS_AUTO:
      m.timestamp_format = dpdfg::TimestampFormat::kAuto;
      break;
    case DPDFG_TS_ISO8601:
      m.timestamp_format = dpdfg::TimestampFormat::kIso8601;
      break;
    case DPDFG_TS_NUMERIC:
      m.timestamp_format = dpdfg::TimestampFormat::kNumeric;
      break;
    default:
      throw dpdfg::InvalidArgument("timestamp format out of range");
  }
  m.numeric_unit = to_unit(options->numeric_unit);
  return m;
}

dpdfg::SyntheticLogSpec to_spec(const dpdfg_synthetic_spec& s) {
  dpdfg::SyntheticLogSpec out;
  out.trace_count = s.trace_count;
  out.alphabet_size = s.alphabet_size;
  out.variant_count = s.variant_count;
  out.distribution =
      s.zipf ? dpdfg::VariantDistribution::kZipf : dpdfg::VariantDistribution::kUniform;
  out.zipf_exponent = s.zipf_exponent;
  out.duration_mu = s.duration_mu;
  out.duration_sigma = s.duration_sigma;
  out.outlier_rate = s.outlier_rate;
  out.outlier_factor = s.outlier_factor;
  return out;
}

dpdfg::DisclosureRequest to_request(const dpdfg_request& r) {
  dpdfg::DisclosureRequest out;
  if (r.mode != DPDFG_MODE_P1 && r.mode != DPDFG_MODE_P2) {
    throw dpdfg::InvalidArgument("mode out of range");
  }
  out.mode = r.mode == DPDFG_MODE_P1 ? dpdfg::DisclosureMode::kRiskToUtility
                                     : dpdfg::DisclosureMode::kUtilityToRisk;
  out.aggregation = to_kind(r.aggregation);
  if (r.has_delta) out.delta = r.delta;
  if (r.has_mape) out.mape = r.mape;
  out.precision = r.precision;
  out.beta = r.beta;
  out.seed = r.seed;
  out.runs = r.runs;
  out.include_boundary_time = r.include_boundary_time != 0;
  if (r.time_unit != DPDFG_UNIT_AUTO) out.time_unit = to_unit(r.time_unit);
  return out;
}

}  // namespace

extern "C" {

const char* dpdfg_version(void) { return "1.0.0"; }

const char* dpdfg_last_error(void) { return g_last_error.c_str(); }

const char* dpdfg_status_name(dpdfg_status status) {
  switch (status) {
    case DPDFG_OK:
      return "ok";
    case DPDFG_INVALID_ARGUMENT:
      return "invalid argument";
    case DPDFG_INGEST_ERROR:
      return "ingest error";
    case DPDFG_DOMAIN_ERROR:
      return "domain error";
    case DPDFG_IO_ERROR:
      return "i/o error";
    case DPDFG_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void dpdfg_string_free(char* text) { std::free(text); }

dpdfg_status dpdfg_parse_aggregation(const char* name, dpdfg_aggregation* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto kind = dpdfg::parse_aggregation(name);
    if (!kind) throw dpdfg::InvalidArgument(std::string("unknown aggregation '") + name + "'");
    *out = static_cast<dpdfg_aggregation>(*kind);
  });
}

dpdfg_status dpdfg_parse_time_unit(const char* name, dpdfg_time_unit* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    if (std::string_view(name) == "auto") {
      *out = DPDFG_UNIT_AUTO;
      return;
    }
    const auto unit = dpdfg::parse_time_unit(name);
    if (!unit) throw dpdfg::InvalidArgument(std::string("unknown time unit '") + name + "'");
    *out = static_cast<dpdfg_time_unit>(*unit);
  });
}

dpdfg_status dpdfg_parse_format(const char* name, dpdfg_format* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto format = dpdfg::parse_report_format(name);
    if (!format) throw dpdfg::InvalidArgument(std::string("unknown format '") + name + "'");
    *out = static_cast<dpdfg_format>(*format);
  });
}

dpdfg_status dpdfg_parse_timestamp_format(const char* name, dpdfg_timestamp_format* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const std::string_view n(name);
    if (n == "auto") {
      *out = DPDFG_TS_AUTO;
    } else if (n == "iso8601" || n == "iso") {
      *out = DPDFG_TS_ISO8601;
    } else if (n == "numeric") {
      *out = DPDFG_TS_NUMERIC;
    } else {
      throw dpdfg::InvalidArgument(std::string("unknown timestamp format '") + name + "'");
    }
  });
}

void dpdfg_csv_options_init(dpdfg_csv_options* options) {
  if (options == nullptr) return;
  options->case_column = "case";
  options->activity_column = "activity";
  options->timestamp_column = "timestamp";
  options->timestamp_format = DPDFG_TS_AUTO;
  options->numeric_unit = DPDFG_UNIT_HOURS;
}

dpdfg_status dpdfg_log_read_file(const char* path, const dpdfg_csv_options* options,
                                 dpdfg_log** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    auto log = dpdfg::read_event_log_file(path, to_mapping(options));
    *out = new dpdfg_log{std::move(log)};
  });
}

dpdfg_status dpdfg_log_read_csv_buffer(const char* data, size_t size,
                                       const dpdfg_csv_options* options, dpdfg_log** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (size > 0) require(data, "data");
    auto log = dpdfg::parse_csv(std::string_view(data ? data : "", size), to_mapping(options));
    *out = new dpdfg_log{std::move(log)};
  });
}

dpdfg_status dpdfg_log_read_xes_buffer(const char* data, size_t size, dpdfg_log** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (size > 0) require(data, "data");
    auto log = dpdfg::parse_xes(std::string_view(data ? data : "", size));
    *out = new dpdfg_log{std::move(log)};
  });
}

dpdfg_status dpdfg_synthetic_spec_init(dpdfg_synthetic_spec* spec, const char* profile) {
  return guarded([&] {
    require(spec, "spec");
    dpdfg::SyntheticLogSpec s;
    if (profile != nullptr) {
      const auto p = dpdfg::synthetic_profile(profile);
      if (!p) throw dpdfg::InvalidArgument(std::string("unknown profile '") + profile + "'");
      s = *p;
    }
    spec->trace_count = s.trace_count;
    spec->alphabet_size = s.alphabet_size;
    spec->variant_count = s.variant_count;
    spec->zipf = s.distribution == dpdfg::VariantDistribution::kZipf;
    spec->zipf_exponent = s.zipf_exponent;
    spec->duration_mu = s.duration_mu;
    spec->duration_sigma = s.duration_sigma;
    spec->outlier_rate = s.outlier_rate;
    spec->outlier_factor = s.outlier_factor;
  });
}

dpdfg_status dpdfg_log_generate(const dpdfg_synthetic_spec* spec, uint64_t seed,
                                dpdfg_log** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    auto log = dpdfg::generate_log(to_spec(*spec), seed);
    *out = new dpdfg_log{std::move(log)};
  });
}

size_t dpdfg_log_trace_count(const dpdfg_log* log) { return log ? log->log.trace_count() : 0; }

size_t dpdfg_log_event_count(const dpdfg_log* log) { return log ? log->log.event_count() : 0; }

dpdfg_status dpdfg_log_write_csv(const dpdfg_log* log, char** out) {
  return guarded([&] {
    require(log, "log");
    require(out, "out");
    *out = copy_string(dpdfg::write_canonical_csv(log->log));
  });
}

void dpdfg_log_free(dpdfg_log* log) { delete log; }

dpdfg_status dpdfg_graph_build(const dpdfg_log* log, dpdfg_graph** out) {
  return guarded([&] {
    require(log, "log");
    require(out, "out");
    *out = nullptr;
    auto dfg = dpdfg::build_dfg(log->log, dpdfg::TimeUnit::kNanoseconds);
    *out = new dpdfg_graph{std::move(dfg)};
  });
}

size_t dpdfg_graph_activity_count(const dpdfg_graph* graph) {
  return graph ? graph->dfg.activities.size() : 0;
}

size_t dpdfg_graph_edge_count(const dpdfg_graph* graph) {
  return graph ? graph->dfg.edges.size() : 0;
}

dpdfg_status dpdfg_graph_summary(const dpdfg_graph* graph, dpdfg_time_unit unit, int as_json,
                                 char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    const dpdfg::TimeUnit u = unit == DPDFG_UNIT_AUTO
                                  ? dpdfg::auto_time_unit(graph->dfg, dpdfg::AggregationKind::kMax)
                                  : to_unit(unit);
    *out = copy_string(as_json ? dpdfg::dfg_summary_json(graph->dfg, u)
                               : dpdfg::dfg_summary_text(graph->dfg, u));
  });
}

void dpdfg_graph_free(dpdfg_graph* graph) { delete graph; }

void dpdfg_request_init(dpdfg_request* request) {
  if (request == nullptr) return;
  const dpdfg::DisclosureRequest d;
  request->mode = DPDFG_MODE_P1;
  request->aggregation = DPDFG_AGG_FREQUENCY;
  request->has_delta = 0;
  request->delta = 0.0;
  request->has_mape = 0;
  request->mape = 0.0;
  request->precision = d.precision;
  request->beta = d.beta;
  request->seed = d.seed;
  request->runs = d.runs;
  request->include_boundary_time = 0;
  request->time_unit = DPDFG_UNIT_AUTO;
}

uint64_t dpdfg_default_seed(void) { return dpdfg::kDefaultSeed; }

dpdfg_status dpdfg_disclose(const dpdfg_graph* graph, const dpdfg_request* request,
                            unsigned threads, dpdfg_report** out) {
  return guarded([&] {
    require(graph, "graph");
    require(request, "request");
    require(out, "out");
    *out = nullptr;
    auto result = dpdfg::disclose(graph->dfg, to_request(*request), threads);
    *out = new dpdfg_report{std::move(result.report)};
  });
}

size_t dpdfg_report_edge_count(const dpdfg_report* report) {
  return report ? report->report.edges.size() : 0;
}

dpdfg_status dpdfg_report_edge(const dpdfg_report* report, size_t index, dpdfg_edge_info* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->report.edges.size()) {
      throw dpdfg::InvalidArgument("edge index " + std::to_string(index) + " out of range");
    }
    const dpdfg::EdgeDisclosure& e = report->report.edges[index];
    out->source = e.source.c_str();
    out->target = e.target.c_str();
    out->occurrences = e.occurrences;
    out->true_value = e.true_value;
    out->epsilon = e.epsilon.value();
    out->sensitivity = e.sensitivity;
    out->noise_scale = e.noise_scale;
    out->noisy_value = e.noisy_value;
    out->released_value = e.released_value;
    out->has_ape = e.ape.has_value();
    out->ape = e.ape.value_or(0.0);
    out->edge_delta = e.edge_delta;
    out->degenerate = e.degenerate;
  });
}

size_t dpdfg_report_activity_count(const dpdfg_report* report) {
  return report ? report->report.activities.size() : 0;
}

const char* dpdfg_report_activity(const dpdfg_report* report, size_t index) {
  if (report == nullptr || index >= report->report.activities.size()) return nullptr;
  return report->report.activities[index].c_str();
}

double dpdfg_report_overall_delta(const dpdfg_report* report) {
  return report ? report->report.overall_delta : NAN;
}

double dpdfg_report_median_epsilon(const dpdfg_report* report) {
  return report ? report->report.median_epsilon.value() : NAN;
}

double dpdfg_report_smape(const dpdfg_report* report) {
  return report ? report->report.smape : NAN;
}

int dpdfg_report_mape(const dpdfg_report* report, double* out) {
  if (report == nullptr || !report->report.mape) return 0;
  if (out != nullptr) *out = *report->report.mape;
  return 1;
}

dpdfg_time_unit dpdfg_report_time_unit(const dpdfg_report* report) {
  return report ? static_cast<dpdfg_time_unit>(report->report.time_unit) : DPDFG_UNIT_AUTO;
}

dpdfg_status dpdfg_report_emit(const dpdfg_report* report, dpdfg_format format, unsigned flags,
                               char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (format < DPDFG_FORMAT_JSON || format > DPDFG_FORMAT_DOT) {
      throw dpdfg::InvalidArgument("format out of range");
    }
    dpdfg::EmitOptions options;
    options.annotate_debug = (flags & DPDFG_EMIT_ANNOTATE_DEBUG) != 0;
    options.include_timing = (flags & DPDFG_EMIT_TIMING) != 0;
    *out = copy_string(
        dpdfg::emit(report->report, static_cast<dpdfg::ReportFormat>(format), options));
  });
}

void dpdfg_report_free(dpdfg_report* report) { delete report; }

dpdfg_status dpdfg_sweep_run(const char* config_json, const char* base_dir, unsigned threads,
                             char** out_csv) {
  return guarded([&] {
    require(config_json, "config_json");
    require(out_csv, "out_csv");
    const auto spec = dpdfg::parse_sweep_config(config_json, base_dir ? base_dir : ".");
    *out_csv = copy_string(dpdfg::sweep_to_csv(dpdfg::run_sweep(spec, threads)));
  });
}

}  // extern "C"
