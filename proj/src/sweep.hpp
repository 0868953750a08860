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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfg.hpp"
#include "event_log.hpp"
#include "pipeline.hpp"
#include "synthetic.hpp"

namespace dpdfg {

// One input of a sweep: a file on disk or a generated log.
struct SweepLog {
  std::string name;
  std::optional<std::string> path;
  std::optional<SyntheticLogSpec> synthetic;
  ColumnMapping mapping;
};

inline const std::vector<double> kDefaultDeltaGrid = {0.01, 0.05, 0.1, 0.2, 0.3, 0.4,
                                                      0.5,  0.6,  0.7, 0.8, 0.9};

struct SweepSpec {
  std::vector<SweepLog> logs;
  std::vector<double> deltas = kDefaultDeltaGrid;  // P1 grid
  std::vector<double> mapes;                       // P2 grid
  std::vector<AggregationKind> aggregations = {AggregationKind::kFrequency};
  unsigned runs = 10;
  std::uint64_t seed = kDefaultSeed;
  double precision = 0.5;
  double beta = 0.05;
  std::optional<TimeUnit> time_unit;

  void validate() const;
};

struct SweepRow {
  std::string log;
  AggregationKind aggregation = AggregationKind::kFrequency;
  DisclosureMode mode = DisclosureMode::kRiskToUtility;
  double parameter = 0.0;  // delta for P1, mape target for P2
  std::size_t edges = 0;
  unsigned runs = 0;
  Epsilon median_epsilon;
  std::optional<double> mape;
  double mape_se = 0.0;
  double smape = 0.0;
  double smape_se = 0.0;
  double median_delta = 0.0;
  double max_delta = 0.0;
  double wall_ms = 0.0;
  std::string error;  // empty on success
};

// Parses the JSON sweep configuration. Relative log paths resolve against
// `base_dir`.
SweepSpec parse_sweep_config(std::string_view json_text, const std::string& base_dir = ".");

// Rows ordered by log, aggregation, then the P1 grid followed by the P2 grid.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned threads = 1);

inline constexpr std::string_view kSweepCsvHeader =
    "log,aggregation,mode,parameter,edges,runs,median_epsilon,mape,mape_se,smape,"
    "smape_se,median_delta,max_delta,wall_ms,error";

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace dpdfg
