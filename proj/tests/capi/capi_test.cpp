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

// Exercises the shared library through its C header only.

#include "dpdfg/dpdfg.h"

#include <gtest/gtest.h>

#include <cmath>
#include <string>

namespace {

const char kCsv[] =
    "case,activity,timestamp\n"
    "1,A,0\n1,B,2\n1,C,5\n"
    "2,A,1\n2,C,4\n"
    "3,A,2\n3,B,3\n3,C,9\n";

struct Owned {
  char* p = nullptr;
  ~Owned() { dpdfg_string_free(p); }
};

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(dpdfg_version(), "1.0.0");
  EXPECT_STREQ(dpdfg_status_name(DPDFG_OK), "ok");
  EXPECT_STREQ(dpdfg_status_name(DPDFG_INGEST_ERROR), "ingest error");
  EXPECT_EQ(dpdfg_default_seed(), 20211u);
}

TEST(CApi, EndToEnd) {
  dpdfg_log* log = nullptr;
  ASSERT_EQ(dpdfg_log_read_csv_buffer(kCsv, sizeof kCsv - 1, nullptr, &log), DPDFG_OK)
      << dpdfg_last_error();
  EXPECT_EQ(dpdfg_log_trace_count(log), 3u);
  EXPECT_EQ(dpdfg_log_event_count(log), 8u);

  dpdfg_graph* graph = nullptr;
  ASSERT_EQ(dpdfg_graph_build(log, &graph), DPDFG_OK);
  EXPECT_EQ(dpdfg_graph_activity_count(graph), 3u);
  // --A, AB, BC, AC, C--
  EXPECT_EQ(dpdfg_graph_edge_count(graph), 5u);

  dpdfg_request req;
  dpdfg_request_init(&req);
  req.aggregation = DPDFG_AGG_MAX;
  req.has_delta = 1;
  req.delta = 0.4;
  req.time_unit = DPDFG_UNIT_HOURS;
  dpdfg_report* report = nullptr;
  // Both windows cover every occurrence: nothing left to protect.
  ASSERT_EQ(dpdfg_disclose(graph, &req, 1, &report), DPDFG_OK) << dpdfg_last_error();
  EXPECT_TRUE(std::isinf(dpdfg_report_median_epsilon(report)));
  dpdfg_report_free(report);

  req.precision = 0.1;
  ASSERT_EQ(dpdfg_disclose(graph, &req, 2, &report), DPDFG_OK) << dpdfg_last_error();
  ASSERT_EQ(dpdfg_report_edge_count(report), 3u);
  EXPECT_EQ(dpdfg_report_time_unit(report), DPDFG_UNIT_HOURS);
  EXPECT_EQ(dpdfg_report_activity_count(report), 3u);
  EXPECT_STREQ(dpdfg_report_activity(report, 0), "A");
  EXPECT_EQ(dpdfg_report_activity(report, 3), nullptr);

  dpdfg_edge_info info;
  ASSERT_EQ(dpdfg_report_edge(report, 1, &info), DPDFG_OK);
  EXPECT_STREQ(info.source, "A");
  EXPECT_STREQ(info.target, "C");
  EXPECT_EQ(info.occurrences, 1u);
  EXPECT_EQ(info.true_value, 3.0);
  EXPECT_TRUE(info.degenerate);
  EXPECT_LE(info.edge_delta, 0.4 + 1e-9);
  for (size_t i = 0; i < 3; ++i) {
    ASSERT_EQ(dpdfg_report_edge(report, i, &info), DPDFG_OK);
    EXPECT_LE(info.edge_delta, dpdfg_report_overall_delta(report));
  }
  EXPECT_EQ(dpdfg_report_edge(report, 3, &info), DPDFG_INVALID_ARGUMENT);
  EXPECT_NE(std::string(dpdfg_last_error()).find("out of range"), std::string::npos);

  double mape = -1.0;
  EXPECT_EQ(dpdfg_report_mape(report, &mape), 1);
  EXPECT_GE(mape, 0.0);
  EXPECT_GE(dpdfg_report_smape(report), 0.0);
  EXPECT_TRUE(std::isfinite(dpdfg_report_median_epsilon(report)));

  for (dpdfg_format f : {DPDFG_FORMAT_JSON, DPDFG_FORMAT_CSV, DPDFG_FORMAT_DOT}) {
    Owned text;
    ASSERT_EQ(dpdfg_report_emit(report, f, DPDFG_EMIT_ANNOTATE_DEBUG, &text.p), DPDFG_OK);
    EXPECT_GT(std::string(text.p).size(), 10u);
  }
  Owned json;
  ASSERT_EQ(dpdfg_report_emit(report, DPDFG_FORMAT_JSON, DPDFG_EMIT_TIMING, &json.p), DPDFG_OK);
  EXPECT_NE(std::string(json.p).find("runtime_ms"), std::string::npos);

  Owned summary;
  ASSERT_EQ(dpdfg_graph_summary(graph, DPDFG_UNIT_AUTO, 1, &summary.p), DPDFG_OK);
  EXPECT_NE(std::string(summary.p).find("\"time_unit\": \"h\""), std::string::npos);

  Owned csv;
  ASSERT_EQ(dpdfg_log_write_csv(log, &csv.p), DPDFG_OK);
  EXPECT_EQ(std::string(csv.p).rfind("case,activity,timestamp\n", 0), 0u);

  dpdfg_report_free(report);
  dpdfg_graph_free(graph);
  dpdfg_log_free(log);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
  dpdfg_log* log = reinterpret_cast<dpdfg_log*>(0x1);
  EXPECT_EQ(dpdfg_log_read_file("/nonexistent.csv", nullptr, &log), DPDFG_IO_ERROR);
  EXPECT_EQ(log, nullptr);
  EXPECT_NE(std::string(dpdfg_last_error()).find("/nonexistent.csv"), std::string::npos);

  const char bad[] = "case,activity,timestamp\n1,A,later\n";
  EXPECT_EQ(dpdfg_log_read_csv_buffer(bad, sizeof bad - 1, nullptr, &log), DPDFG_INGEST_ERROR);
  EXPECT_NE(std::string(dpdfg_last_error()).find("row 2"), std::string::npos);

  EXPECT_EQ(dpdfg_log_read_xes_buffer("<log>", 5, &log), DPDFG_INGEST_ERROR);
  EXPECT_EQ(dpdfg_graph_build(nullptr, nullptr), DPDFG_INVALID_ARGUMENT);

  // Success clears the message.
  dpdfg_aggregation agg;
  EXPECT_EQ(dpdfg_parse_aggregation("avg", &agg), DPDFG_OK);
  EXPECT_EQ(agg, DPDFG_AGG_AVG);
  EXPECT_STREQ(dpdfg_last_error(), "");
  EXPECT_EQ(dpdfg_parse_aggregation("median", &agg), DPDFG_INVALID_ARGUMENT);
}

TEST(CApi, RequestContract) {
  dpdfg_log* log = nullptr;
  ASSERT_EQ(dpdfg_log_read_csv_buffer(kCsv, sizeof kCsv - 1, nullptr, &log), DPDFG_OK);
  dpdfg_graph* graph = nullptr;
  ASSERT_EQ(dpdfg_graph_build(log, &graph), DPDFG_OK);

  dpdfg_request req;
  dpdfg_request_init(&req);
  dpdfg_report* report = nullptr;
  EXPECT_EQ(dpdfg_disclose(graph, &req, 1, &report), DPDFG_INVALID_ARGUMENT);
  req.has_delta = req.has_mape = 1;
  req.delta = 0.4;
  req.mape = 0.3;
  EXPECT_EQ(dpdfg_disclose(graph, &req, 1, &report), DPDFG_INVALID_ARGUMENT);
  EXPECT_NE(std::string(dpdfg_last_error()).find("mutually exclusive"), std::string::npos);
  req.has_mape = 0;
  req.delta = 1.5;
  EXPECT_EQ(dpdfg_disclose(graph, &req, 1, &report), DPDFG_DOMAIN_ERROR);
  req.delta = 0.4;
  req.aggregation = static_cast<dpdfg_aggregation>(42);
  EXPECT_EQ(dpdfg_disclose(graph, &req, 1, &report), DPDFG_INVALID_ARGUMENT);
  EXPECT_EQ(report, nullptr);

  dpdfg_graph_free(graph);
  dpdfg_log_free(log);
}

TEST(CApi, SyntheticAndSweep) {
  dpdfg_synthetic_spec spec;
  ASSERT_EQ(dpdfg_synthetic_spec_init(&spec, "skewed"), DPDFG_OK);
  EXPECT_EQ(spec.zipf, 1);
  spec.trace_count = 30;
  dpdfg_log* a = nullptr;
  dpdfg_log* b = nullptr;
  ASSERT_EQ(dpdfg_log_generate(&spec, 5, &a), DPDFG_OK);
  ASSERT_EQ(dpdfg_log_generate(&spec, 5, &b), DPDFG_OK);
  Owned ca, cb;
  dpdfg_log_write_csv(a, &ca.p);
  dpdfg_log_write_csv(b, &cb.p);
  EXPECT_STREQ(ca.p, cb.p);
  dpdfg_log_free(a);
  dpdfg_log_free(b);
  EXPECT_EQ(dpdfg_synthetic_spec_init(&spec, "nope"), DPDFG_INVALID_ARGUMENT);
  spec.trace_count = 0;
  dpdfg_synthetic_spec_init(&spec, nullptr);
  spec.trace_count = 0;
  EXPECT_EQ(dpdfg_log_generate(&spec, 1, &a), DPDFG_INVALID_ARGUMENT);
  EXPECT_STREQ(dpdfg_last_error(), "empty log");

  Owned csv;
  ASSERT_EQ(dpdfg_sweep_run(R"({"logs":["simple"],"deltas":[0.4],"runs":2})", nullptr, 2,
                            &csv.p),
            DPDFG_OK)
      << dpdfg_last_error();
  const std::string text = csv.p;
  EXPECT_EQ(text.rfind("log,aggregation,mode,parameter,", 0), 0u);
  EXPECT_NE(text.find("simple,frequency,P1,0.4,"), std::string::npos);
  char* none = nullptr;
  EXPECT_EQ(dpdfg_sweep_run("{", nullptr, 1, &none), DPDFG_INVALID_ARGUMENT);
}

}  // namespace
