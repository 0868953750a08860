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

#include "utility_model.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace dpdfg {

void UtilityParams::validate() const {
  if (!(mape_target > 0.0) || !std::isfinite(mape_target)) {
    throw DomainError("MAPE target must be a positive number, got " +
                      std::to_string(mape_target));
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw DomainError("beta must lie in (0, 1), got " + std::to_string(beta));
  }
}

double ape(double actual, double noisy) {
  if (actual == 0.0) throw DomainError("APE is undefined for an actual value of 0");
  return std::fabs(actual - noisy) / std::fabs(actual);
}

double mape(std::span<const double> actuals, std::span<const double> noisies) {
  if (actuals.size() != noisies.size()) throw DomainError("MAPE: length mismatch");
  if (actuals.empty()) throw DomainError("MAPE of an empty series");
  double total = 0.0;
  for (std::size_t i = 0; i < actuals.size(); ++i) total += ape(actuals[i], noisies[i]);
  return total / static_cast<double>(actuals.size());
}

double smape(std::span<const double> actuals, std::span<const double> noisies) {
  if (actuals.size() != noisies.size()) throw DomainError("SMAPE: length mismatch");
  if (actuals.empty()) throw DomainError("SMAPE of an empty series");
  double total = 0.0;
  for (std::size_t i = 0; i < actuals.size(); ++i) {
    const double denom = std::fabs(actuals[i] + noisies[i]);
    if (denom == 0.0) throw DomainError("SMAPE is undefined when actual + noisy = 0");
    total += std::fabs(actuals[i] - noisies[i]) / denom;
  }
  return total / static_cast<double>(actuals.size());
}

double alpha_per_edge(double actual_weight, double mape_target) {
  if (!(actual_weight > 0.0)) {
    throw DomainError("noise tolerance needs a positive weight, got " +
                      std::to_string(actual_weight));
  }
  return actual_weight * mape_target;
}

double epsilon_from_alpha(double sensitivity, double alpha, double beta) {
  if (!(sensitivity > 0.0)) throw DomainError("sensitivity must be positive");
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("beta must lie in (0, 1)");
  return sensitivity / alpha * std::log(1.0 / beta);
}

}  // namespace dpdfg
