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

#include <span>

namespace dpdfg {

struct UtilityParams {
  double mape_target = 0.0;  // tolerated absolute percentage error per edge
  double beta = 0.05;        // probability that the noise exceeds the tolerance

  // Throws DomainError unless mape_target > 0 and 0 < beta < 1.
  void validate() const;

  bool operator==(const UtilityParams&) const = default;
};

double ape(double actual, double noisy);

double mape(std::span<const double> actuals, std::span<const double> noisies);
double smape(std::span<const double> actuals, std::span<const double> noisies);

// Noise tolerance alpha for an edge: actual_weight * mape_target.
double alpha_per_edge(double actual_weight, double mape_target);

// Laplace tail calibration: P(|Lap(sensitivity/eps)| > alpha) = beta.
double epsilon_from_alpha(double sensitivity, double alpha, double beta);

}  // namespace dpdfg
