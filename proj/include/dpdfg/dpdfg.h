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

/* Differentially-private directly-follows graphs: C interface.
 *
 * Every function that can fail returns a dpdfg_status. On failure the message
 * is available from dpdfg_last_error() on the calling thread until the next
 * call into the library from that thread. Objects are opaque and owned by the
 * caller once returned; release them with the matching *_free function.
 * Strings returned through char** are released with dpdfg_string_free.
 */
#ifndef DPDFG_DPDFG_H_
#define DPDFG_DPDFG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DPDFG_BUILDING_LIBRARY)
#define DPDFG_API __declspec(dllexport)
#else
#define DPDFG_API __declspec(dllimport)
#endif
#else
#define DPDFG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpdfg_status {
  DPDFG_OK = 0,
  DPDFG_INVALID_ARGUMENT = 1,
  DPDFG_INGEST_ERROR = 2,
  DPDFG_DOMAIN_ERROR = 3,
  DPDFG_IO_ERROR = 4,
  DPDFG_INTERNAL_ERROR = 5
} dpdfg_status;

typedef enum dpdfg_aggregation {
  DPDFG_AGG_FREQUENCY = 0,
  DPDFG_AGG_SUM = 1,
  DPDFG_AGG_MIN = 2,
  DPDFG_AGG_MAX = 3,
  DPDFG_AGG_AVG = 4
} dpdfg_aggregation;

typedef enum dpdfg_mode {
  DPDFG_MODE_P1 = 0, /* delta target -> epsilon -> MAPE */
  DPDFG_MODE_P2 = 1  /* MAPE target -> epsilon -> delta */
} dpdfg_mode;

typedef enum dpdfg_time_unit {
  DPDFG_UNIT_AUTO = -1,
  DPDFG_UNIT_NANOSECONDS = 0,
  DPDFG_UNIT_MICROSECONDS = 1,
  DPDFG_UNIT_MILLISECONDS = 2,
  DPDFG_UNIT_SECONDS = 3,
  DPDFG_UNIT_MINUTES = 4,
  DPDFG_UNIT_HOURS = 5,
  DPDFG_UNIT_DAYS = 6
} dpdfg_time_unit;

typedef enum dpdfg_timestamp_format {
  DPDFG_TS_AUTO = 0,
  DPDFG_TS_ISO8601 = 1,
  DPDFG_TS_NUMERIC = 2
} dpdfg_timestamp_format;

typedef enum dpdfg_format {
  DPDFG_FORMAT_JSON = 0,
  DPDFG_FORMAT_CSV = 1,
  DPDFG_FORMAT_DOT = 2
} dpdfg_format;

/* Flags for dpdfg_report_emit. */
#define DPDFG_EMIT_ANNOTATE_DEBUG 0x1u
#define DPDFG_EMIT_TIMING 0x2u

typedef struct dpdfg_log dpdfg_log;
typedef struct dpdfg_graph dpdfg_graph;
typedef struct dpdfg_report dpdfg_report;

DPDFG_API const char* dpdfg_version(void);
DPDFG_API const char* dpdfg_last_error(void);
DPDFG_API const char* dpdfg_status_name(dpdfg_status status);
DPDFG_API void dpdfg_string_free(char* text);

/* Name parsing, for front ends. Return DPDFG_INVALID_ARGUMENT on unknown names. */
DPDFG_API dpdfg_status dpdfg_parse_aggregation(const char* name, dpdfg_aggregation* out);
DPDFG_API dpdfg_status dpdfg_parse_time_unit(const char* name, dpdfg_time_unit* out);
DPDFG_API dpdfg_status dpdfg_parse_format(const char* name, dpdfg_format* out);
DPDFG_API dpdfg_status dpdfg_parse_timestamp_format(const char* name,
                                                    dpdfg_timestamp_format* out);

/* ---- event logs ---- */

typedef struct dpdfg_csv_options {
  const char* case_column;
  const char* activity_column;
  const char* timestamp_column;
  dpdfg_timestamp_format timestamp_format;
  dpdfg_time_unit numeric_unit; /* unit of numeric timestamps; AUTO is invalid */
} dpdfg_csv_options;

/* case / activity / timestamp, auto timestamps, numeric values in hours. */
DPDFG_API void dpdfg_csv_options_init(dpdfg_csv_options* options);

/* Picks the parser by extension (.xes, else CSV). options may be NULL. */
DPDFG_API dpdfg_status dpdfg_log_read_file(const char* path, const dpdfg_csv_options* options,
                                           dpdfg_log** out);
DPDFG_API dpdfg_status dpdfg_log_read_csv_buffer(const char* data, size_t size,
                                                 const dpdfg_csv_options* options,
                                                 dpdfg_log** out);
DPDFG_API dpdfg_status dpdfg_log_read_xes_buffer(const char* data, size_t size,
                                                 dpdfg_log** out);

typedef struct dpdfg_synthetic_spec {
  size_t trace_count;
  size_t alphabet_size;
  size_t variant_count;
  int zipf;             /* 0: uniform variants, 1: Zipf */
  double zipf_exponent;
  double duration_mu;   /* lognormal location, log-hours */
  double duration_sigma;
  double outlier_rate;
  double outlier_factor;
} dpdfg_synthetic_spec;

/* profile: "simple", "skewed", "unique", or NULL for the library defaults. */
DPDFG_API dpdfg_status dpdfg_synthetic_spec_init(dpdfg_synthetic_spec* spec,
                                                 const char* profile);
DPDFG_API dpdfg_status dpdfg_log_generate(const dpdfg_synthetic_spec* spec, uint64_t seed,
                                          dpdfg_log** out);

DPDFG_API size_t dpdfg_log_trace_count(const dpdfg_log* log);
DPDFG_API size_t dpdfg_log_event_count(const dpdfg_log* log);
DPDFG_API dpdfg_status dpdfg_log_write_csv(const dpdfg_log* log, char** out);
DPDFG_API void dpdfg_log_free(dpdfg_log* log);

/* ---- graphs ---- */

DPDFG_API dpdfg_status dpdfg_graph_build(const dpdfg_log* log, dpdfg_graph** out);
DPDFG_API size_t dpdfg_graph_activity_count(const dpdfg_graph* graph);
/* Includes the edges from and to the "--" boundary node. */
DPDFG_API size_t dpdfg_graph_edge_count(const dpdfg_graph* graph);
/* Per-edge statistics as text (as_json = 0) or JSON. */
DPDFG_API dpdfg_status dpdfg_graph_summary(const dpdfg_graph* graph, dpdfg_time_unit unit,
                                           int as_json, char** out);
DPDFG_API void dpdfg_graph_free(dpdfg_graph* graph);

/* ---- disclosure ---- */

typedef struct dpdfg_request {
  dpdfg_mode mode;
  dpdfg_aggregation aggregation;
  int has_delta;
  double delta;
  int has_mape;
  double mape;
  double precision;
  double beta;
  uint64_t seed;
  unsigned runs;
  int include_boundary_time;
  dpdfg_time_unit time_unit;
} dpdfg_request;

/* P1, frequency, no targets, p = 0.5, beta = 0.05, default seed, one run. */
DPDFG_API void dpdfg_request_init(dpdfg_request* request);
DPDFG_API uint64_t dpdfg_default_seed(void);

DPDFG_API dpdfg_status dpdfg_disclose(const dpdfg_graph* graph, const dpdfg_request* request,
                                      unsigned threads, dpdfg_report** out);

typedef struct dpdfg_edge_info {
  const char* source; /* valid while the report lives */
  const char* target;
  size_t occurrences;
  double true_value;
  double epsilon; /* +infinity when unbounded */
  double sensitivity;
  double noise_scale;
  double noisy_value;
  double released_value;
  int has_ape;
  double ape;
  double edge_delta;
  int degenerate;
} dpdfg_edge_info;

DPDFG_API size_t dpdfg_report_edge_count(const dpdfg_report* report);
DPDFG_API dpdfg_status dpdfg_report_edge(const dpdfg_report* report, size_t index,
                                         dpdfg_edge_info* out);
DPDFG_API size_t dpdfg_report_activity_count(const dpdfg_report* report);
DPDFG_API const char* dpdfg_report_activity(const dpdfg_report* report, size_t index);
DPDFG_API double dpdfg_report_overall_delta(const dpdfg_report* report);
DPDFG_API double dpdfg_report_median_epsilon(const dpdfg_report* report);
DPDFG_API double dpdfg_report_smape(const dpdfg_report* report);
/* Returns 0 when no edge has a non-zero true value. */
DPDFG_API int dpdfg_report_mape(const dpdfg_report* report, double* out);
DPDFG_API dpdfg_time_unit dpdfg_report_time_unit(const dpdfg_report* report);
DPDFG_API dpdfg_status dpdfg_report_emit(const dpdfg_report* report, dpdfg_format format,
                                         unsigned flags, char** out);
DPDFG_API void dpdfg_report_free(dpdfg_report* report);

/* ---- sweeps ---- */

/* Runs the JSON sweep configuration and returns the grid CSV. Relative log
 * paths resolve against base_dir (NULL = current directory). */
DPDFG_API dpdfg_status dpdfg_sweep_run(const char* config_json, const char* base_dir,
                                       unsigned threads, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* DPDFG_DPDFG_H_ */
