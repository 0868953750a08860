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

#include "event_log.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "error.hpp"
#include "fixtures.hpp"

namespace dpdfg {
namespace {

constexpr std::int64_t kHourNs = 3'600'000'000'000;

TEST(EventLog, GroupsAndSortsByTimestamp) {
  const auto log = parse_csv(
      "case,activity,timestamp\n"
      "c2,X,5\n"
      "c1,B,2\n"
      "c1,A,1\n"
      "c2,Y,5\n");
  ASSERT_EQ(log.trace_count(), 2u);
  EXPECT_EQ(log.event_count(), 4u);
  const Trace& c1 = log.traces().at("c1");
  EXPECT_EQ(c1.events[0].activity, "A");
  EXPECT_EQ(c1.events[1].activity, "B");
  EXPECT_EQ(c1.events[1].timestamp.ns, 2 * kHourNs);
  // Equal timestamps keep file order.
  const Trace& c2 = log.traces().at("c2");
  EXPECT_EQ(c2.events[0].activity, "X");
  EXPECT_EQ(c2.events[1].activity, "Y");
}

TEST(EventLog, CustomColumnsAndExtraAttributes) {
  ColumnMapping m;
  m.case_column = "CaseID";
  m.activity_column = "Step";
  m.timestamp_column = "When";
  const auto log = parse_csv(
      "Step,When,CaseID,resource,cost\n"
      "Triage,2021-03-01T08:00:00Z,p1,nurse,\n"
      "Lab,2021-03-01T09:30:00+01:00,p1,doc,12\n",
      m);
  const Trace& t = log.traces().at("p1");
  ASSERT_EQ(t.events.size(), 2u);
  // 09:30+01:00 is 08:30Z, after triage.
  EXPECT_EQ(t.events[1].activity, "Lab");
  EXPECT_EQ(t.events[1].timestamp.ns - t.events[0].timestamp.ns, kHourNs / 2);
  EXPECT_EQ(t.events[0].extra_attrs.count("cost"), 0u);
  EXPECT_EQ(t.events[1].extra_attrs.at("cost"), "12");
  EXPECT_EQ(t.events[0].extra_attrs.at("resource"), "nurse");
}

TEST(EventLog, NumericUnits) {
  ColumnMapping m;
  m.timestamp_format = TimestampFormat::kNumeric;
  m.numeric_unit = TimeUnit::kMinutes;
  const auto log = parse_csv("case,activity,timestamp\nc,A,0\nc,B,90\n", m);
  const auto& e = log.traces().at("c").events;
  EXPECT_EQ(e[1].timestamp.ns - e[0].timestamp.ns, kHourNs * 3 / 2);
}

std::string ingest_error(std::string_view csv, const ColumnMapping& m = {}) {
  try {
    parse_csv(csv, m);
  } catch (const IngestError& e) {
    return e.what();
  }
  return "";
}

TEST(EventLog, ErrorsNameTheRow) {
  EXPECT_EQ(ingest_error("case,activity\nc,A\n"), "row 1: missing timestamp column \"timestamp\"");
  EXPECT_EQ(ingest_error("case,activity,timestamp\nc,A,1\nc,B,soon\n"),
            "row 3: unparseable timestamp \"soon\"");
  EXPECT_EQ(ingest_error("case,activity,timestamp\nc,A,1,extra\n"),
            "row 2: expected 3 fields, found 4");
  EXPECT_EQ(ingest_error("case,activity,timestamp\nc,,1\n"), "row 2: empty activity label");
  EXPECT_EQ(ingest_error("case,activity,timestamp\nc,--,1\n"),
            "row 2: activity label \"--\" is reserved");
  EXPECT_EQ(ingest_error("case,activity,timestamp\n,A,1\n"), "row 2: empty case id");
  ColumnMapping iso;
  iso.timestamp_format = TimestampFormat::kIso8601;
  EXPECT_EQ(ingest_error("case,activity,timestamp\nc,A,12\n", iso),
            "row 2: unparseable timestamp \"12\"");
}

TEST(EventLog, ReadsFilesAndPrefixesErrors) {
  const auto log = read_event_log_file(fixture::data_path("running_example.csv"));
  EXPECT_EQ(log.trace_count(), 11u);
  EXPECT_EQ(log.event_count(), 33u);
  EXPECT_THROW(read_event_log_file("/nonexistent/log.csv"), IoError);
}

TEST(EventLog, CanonicalCsvRoundTrip) {
  const auto log = read_event_log_file(fixture::data_path("running_example.csv"));
  const std::string csv = write_canonical_csv(log);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "case,activity,timestamp,resource");
  const auto again = parse_csv(csv);
  EXPECT_EQ(again, log);
  EXPECT_EQ(write_canonical_csv(again), csv);
}

TEST(EventLog, StreamOverload) {
  std::istringstream in("case,activity,timestamp\nc,A,1\n");
  EXPECT_EQ(parse_csv(in).event_count(), 1u);
}

}  // namespace
}  // namespace dpdfg
