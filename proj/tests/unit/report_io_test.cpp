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

#include <cmath>
#include <gtest/gtest.h>

#include <sstream>

#include "csv_reader.hpp"
#include "dot_check.hpp"
#include "error.hpp"
#include "fixtures.hpp"

namespace dpdfg {
namespace {

DisclosureReport sample(AggregationKind kind, bool p2 = false) {
  const Dfg dfg = build_dfg(read_event_log_file(fixture::data_path("running_example.csv")));
  DisclosureRequest r;
  r.aggregation = kind;
  r.runs = 3;
  if (p2) {
    r.mode = DisclosureMode::kUtilityToRisk;
    r.mape = 0.25;
  } else {
    r.delta = 0.3;
  }
  auto report = disclose(dfg, r).report;
  report.runtime_ms = 0.0;
  return report;
}

TEST(ReportIo, JsonRoundTrip) {
  for (AggregationKind kind : kAllAggregations) {
    for (bool p2 : {false, true}) {
      const auto report = sample(kind, p2);
      const auto text = report_to_json(report);
      EXPECT_EQ(report_from_json(text), report) << text;
      EXPECT_EQ(report_to_json(report_from_json(text)), text);
    }
  }
}

TEST(ReportIo, JsonCarriesUnboundedAndTiming) {
  auto report = sample(AggregationKind::kFrequency);
  report.edges[0].epsilon = Epsilon::unbounded();
  report.median_epsilon = Epsilon::unbounded();
  report.runtime_ms = 12.5;
  const auto text = report_to_json(report, true);
  EXPECT_NE(text.find("\"unbounded\""), std::string::npos);
  EXPECT_NE(text.find("runtime_ms"), std::string::npos);
  EXPECT_EQ(report_from_json(text), report);
  EXPECT_EQ(report_to_json(report).find("runtime_ms"), std::string::npos);
}

TEST(ReportIo, JsonRejectsOtherSchemas) {
  auto text = report_to_json(sample(AggregationKind::kFrequency));
  const auto pos = text.find("\"schema_version\": 1");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 19, "\"schema_version\": 9");
  EXPECT_THROW(report_from_json(text), InvalidArgument);
  EXPECT_THROW(report_from_json("{not json"), InvalidArgument);
  EXPECT_THROW(report_from_json("{}"), InvalidArgument);
}

TEST(ReportIo, Csv) {
  const auto report = sample(AggregationKind::kMax, true);
  const auto csv = report_to_csv(report);
  CsvReader reader(csv);
  EXPECT_EQ(*reader.next(), (std::vector<std::string>{"source", "target", "true", "epsilon",
                                                       "released", "ape", "delta"}));
  std::size_t rows = 0;
  while (auto row = reader.next()) {
    const auto& e = report.edges[rows++];
    ASSERT_EQ(row->size(), 7u);
    EXPECT_EQ((*row)[0], e.source);
    EXPECT_EQ(std::stod((*row)[2]), e.true_value);
    EXPECT_EQ(std::stod((*row)[4]), e.released_value);
    EXPECT_EQ(std::stod((*row)[6]), e.edge_delta);
  }
  EXPECT_EQ(rows, report.edges.size());
}

TEST(ReportIo, DotIsWellFormedAndComplete) {
  for (bool debug : {false, true}) {
    const auto report = sample(AggregationKind::kFrequency);
    const auto dot = report_to_dot(report, debug);
    const auto parsed = dotcheck::check(dot);
    ASSERT_TRUE(parsed.ok) << parsed.error << "\n" << dot;
    std::set<std::string> nodes(report.activities.begin(), report.activities.end());
    nodes.insert("--");
    EXPECT_EQ(parsed.graph.nodes, nodes);
    ASSERT_EQ(parsed.graph.edges.size(), report.edges.size());
    for (std::size_t i = 0; i < report.edges.size(); ++i) {
      EXPECT_EQ(parsed.graph.edges[i].first, report.edges[i].source);
      EXPECT_EQ(parsed.graph.edges[i].second, report.edges[i].target);
      const auto& label = parsed.graph.edge_labels[i];
      EXPECT_EQ(label.find("eps=") != std::string::npos, debug) << label;
    }
  }
}

TEST(ReportIo, DotEscapesNames) {
  DisclosureReport r = sample(AggregationKind::kFrequency);
  r.activities.push_back("say \"hi\"\\now");
  r.edges[0].source = "say \"hi\"\\now";
  const auto parsed = dotcheck::check(report_to_dot(r));
  ASSERT_TRUE(parsed.ok) << parsed.error;
  EXPECT_EQ(parsed.graph.edges[0].first, "say \"hi\"\\now");
}

TEST(ReportIo, FormatNumber) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(15.0), "15");
  EXPECT_EQ(format_number(INFINITY), "unbounded");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(ReportIo, ParseFormat) {
  EXPECT_EQ(parse_report_format("dot"), ReportFormat::kDot);
  EXPECT_FALSE(parse_report_format("xml").has_value());
}

TEST(ReportIo, Summaries) {
  const Dfg dfg = build_dfg(read_event_log_file(fixture::data_path("running_example.csv")),
                            TimeUnit::kNanoseconds);
  const auto text = dfg_summary_text(dfg, TimeUnit::kHours);
  EXPECT_NE(text.find("edges: 8"), std::string::npos);
  EXPECT_NE(text.find("(A,C)"), std::string::npos);
  const auto json = dfg_summary_json(dfg, TimeUnit::kHours);
  EXPECT_NE(json.find("\"max\": 15.0"), std::string::npos) << json;
}

}  // namespace
}  // namespace dpdfg
