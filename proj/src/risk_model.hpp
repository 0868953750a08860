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

#include <compare>
#include <limits>
#include <span>
#include <vector>

#include "dfg.hpp"

namespace dpdfg {

// Privacy parameter of a Laplace release. Unbounded means the guessing
// advantage target holds without any noise, so the exact value is released;
// it compares greater than every finite epsilon.
class Epsilon {
 public:
  constexpr Epsilon() = default;
  constexpr explicit Epsilon(double value) : value_(value) {}

  static constexpr Epsilon unbounded() {
    return Epsilon(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_unbounded() const {
    return value_ == std::numeric_limits<double>::infinity();
  }
  // +infinity when unbounded.
  constexpr double value() const { return value_; }

  constexpr auto operator<=>(const Epsilon&) const = default;

 private:
  double value_ = std::numeric_limits<double>::infinity();
};

// Maximum tolerated guessing advantage and the guessing precision, the
// latter as a fraction of the edge range.
struct RiskParams {
  double delta = 0.0;
  double precision = 0.5;

  // Throws DomainError unless 0 < delta < 1 and 0 <= precision <= 1.
  void validate() const;

  bool operator==(const RiskParams&) const = default;
};

struct EdgeEpsilon {
  Epsilon epsilon;                        // min over per_occurrence
  std::vector<Epsilon> per_occurrence;
  std::vector<double> priors;             // prior used for each occurrence
  double range = 0.0;                     // r actually used
  bool degenerate = false;                // worst-case prior fallback applied
};

// Share of `durations` within +-precision*r of `t` (closed window).
// Throws DomainError when r <= 0.
double empirical_prior(std::span<const double> durations, double t, double precision,
                       double r);

// Priors for every occurrence of the edge in one sorted pass.
std::vector<double> empirical_priors(std::span<const double> durations, double precision,
                                     double r);

// Prior that demands the most noise for a given advantage bound: (1-delta)/2.
double worst_case_prior(double delta);

// Largest epsilon keeping the advantage at most delta for prior P and range r.
// Unbounded when delta + P >= 1. Throws DomainError for P outside (0,1).
Epsilon epsilon_from_delta(double prior, double delta, double r);

// Per-occurrence calibration with the conservative minimum. Edges with a
// single occurrence or zero range fall back to the worst-case prior (with r
// taken as one time unit when the range is zero) and are flagged.
EdgeEpsilon edge_epsilon_time(const DfgEdge& edge, const RiskParams& params);

// Same epsilon for every frequency edge: worst-case prior, r = 1.
double epsilon_freq(double delta);

// Guessing advantage of one occurrence after a release with epsilon.
// An unbounded epsilon yields 1 - P.
double delta_from_epsilon_time(double prior, Epsilon epsilon, double r);
double delta_from_epsilon_time(double prior, double epsilon, double r);

double delta_from_epsilon_freq(double epsilon);

// Maximum over the given edge advantages. Throws on an empty input.
double dfg_delta(std::span<const double> edge_deltas);

// Upper bound on the attacker's posterior success probability.
double posterior_bound(double prior, double epsilon, double r);

}  // namespace dpdfg
