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
#include <vector>

#include "data_path.hpp"
#include "dfg.hpp"

namespace fixture {

// Durations (hours) of every relation of the running healthcare example,
// including the start/end relations with their measured gaps.
inline dpdfg::Dfg worked_example_dfg() {
  dpdfg::Dfg dfg;
  dfg.unit = dpdfg::TimeUnit::kHours;
  dfg.activities = {"A", "B", "C", "D"};
  const auto add = [&](const std::string& s, const std::string& t, std::vector<double> d) {
    for (double v : d) dfg.add_occurrence(s, t, v);
  };
  add("--", "A", {1, 1, 1, 2, 2, 2, 3, 3, 4, 5, 10});
  add("A", "B", {0.2, 3, 8, 12, 16});
  add("A", "C", {1, 6, 15});
  add("A", "D", {7});
  add("B", "C", {1, 5, 11, 15, 20});
  add("C", "D", {0.2, 0.25, 0.4, 1.5, 2.6, 3.65, 4.7, 6});
  add("D", "--", {0.5, 0.7, 0.9, 0.9, 0.9, 1.3, 1.3, 1.7, 4});
  add("A", "--", {0.5, 3});
  return dfg;
}

inline dpdfg::DfgEdge edge(const std::string& s, const std::string& t,
                           std::vector<double> durations) {
  dpdfg::DfgEdge e;
  e.source = s;
  e.target = t;
  e.durations = std::move(durations);
  return e;
}

}  // namespace fixture
