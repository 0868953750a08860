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

#include "risk_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace dpdfg {
namespace {

// Slack so that window edges computed in floating point stay inclusive.
constexpr double kWindowSlack = 1e-12;

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

void RiskParams::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1), got " + fmt(delta));
  }
  if (!(precision >= 0.0 && precision <= 1.0)) {
    throw DomainError("precision must lie in [0, 1], got " + fmt(precision));
  }
}

double empirical_prior(std::span<const double> durations, double t, double precision,
                       double r) {
  if (!(r > 0.0)) throw DomainError("empirical prior needs a positive range, got " + fmt(r));
  if (durations.empty()) throw DomainError("empirical prior of an empty edge");
  const double half_width = precision * r + kWindowSlack * r;
  const auto hits = std::count_if(durations.begin(), durations.end(),
                                  [&](double v) { return std::fabs(v - t) <= half_width; });
  return static_cast<double>(hits) / static_cast<double>(durations.size());
}

std::vector<double> empirical_priors(std::span<const double> durations, double precision,
                                     double r) {
  if (!(r > 0.0)) throw DomainError("empirical prior needs a positive range, got " + fmt(r));
  std::vector<double> sorted(durations.begin(), durations.end());
  std::sort(sorted.begin(), sorted.end());
  const double half_width = precision * r + kWindowSlack * r;
  const auto n = static_cast<double>(sorted.size());

  std::vector<double> priors;
  priors.reserve(durations.size());
  for (double t : durations) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), t - half_width);
    const auto hi = std::upper_bound(lo, sorted.end(), t + half_width);
    priors.push_back(static_cast<double>(hi - lo) / n);
  }
  return priors;
}

double worst_case_prior(double delta) { return (1.0 - delta) / 2.0; }

Epsilon epsilon_from_delta(double prior, double delta, double r) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw DomainError("prior must lie in (0, 1), got " + fmt(prior));
  }
  if (!(r > 0.0)) throw DomainError("range must be positive, got " + fmt(r));
  if (delta + prior >= 1.0) return Epsilon::unbounded();
  // -ln(P/(1-P) * (1/(delta+P) - 1)) rewritten as log1p(delta / (P(1-P-delta)))
  // to stay accurate for small delta.
  return Epsilon(std::log1p(delta / (prior * (1.0 - prior - delta))) / r);
}

EdgeEpsilon edge_epsilon_time(const DfgEdge& edge, const RiskParams& params) {
  params.validate();
  const std::size_t n = edge.durations.size();
  if (n == 0) throw DomainError("edge (" + edge.source + "," + edge.target + ") is empty");

  EdgeEpsilon out;
  const double r = *std::max_element(edge.durations.begin(), edge.durations.end());

  if (n == 1 || !(r > 0.0)) {
    // A lone occurrence (or an all-zero edge) gives no usable distribution.
    out.degenerate = true;
    out.range = r > 0.0 ? r : 1.0;
    const double prior = worst_case_prior(params.delta);
    const Epsilon eps = epsilon_from_delta(prior, params.delta, out.range);
    out.per_occurrence.assign(n, eps);
    out.priors.assign(n, prior);
    out.epsilon = eps;
    return out;
  }

  out.range = r;
  out.priors = empirical_priors(edge.durations, params.precision, r);
  out.per_occurrence.reserve(n);
  for (double prior : out.priors) {
    out.per_occurrence.push_back(prior >= 1.0 ? Epsilon::unbounded()
                                              : epsilon_from_delta(prior, params.delta, r));
  }
  out.epsilon = *std::min_element(out.per_occurrence.begin(), out.per_occurrence.end());
  return out;
}

double epsilon_freq(double delta) {
  RiskParams{delta, 0.0}.validate();
  return epsilon_from_delta(worst_case_prior(delta), delta, 1.0).value();
}

double delta_from_epsilon_time(double prior, Epsilon epsilon, double r) {
  if (!(prior > 0.0 && prior <= 1.0)) {
    throw DomainError("prior must lie in (0, 1], got " + fmt(prior));
  }
  if (!(r > 0.0)) throw DomainError("range must be positive, got " + fmt(r));
  if (!(epsilon.value() >= 0.0)) {
    throw DomainError("epsilon must be non-negative, got " + fmt(epsilon.value()));
  }
  const double decay = epsilon.is_unbounded() ? 0.0 : std::exp(-epsilon.value() * r);
  const double one_minus_decay =
      epsilon.is_unbounded() ? 1.0 : -std::expm1(-epsilon.value() * r);
  // P/((1-P)e + P) - P, with the subtraction folded into the numerator.
  const double delta = prior * (1.0 - prior) * one_minus_decay / ((1.0 - prior) * decay + prior);
  return std::min(delta, 1.0 - prior);
}

double delta_from_epsilon_time(double prior, double epsilon, double r) {
  return delta_from_epsilon_time(prior, Epsilon(epsilon), r);
}

double delta_from_epsilon_freq(double epsilon) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be non-negative, got " + fmt(epsilon));
  const double s = std::exp(-epsilon / 2.0);  // sqrt(exp(-epsilon))
  return -std::expm1(-epsilon / 2.0) / (1.0 + s);
}

double dfg_delta(std::span<const double> edge_deltas) {
  if (edge_deltas.empty()) throw DomainError("guessing advantage of an empty graph");
  return *std::max_element(edge_deltas.begin(), edge_deltas.end());
}

double posterior_bound(double prior, double epsilon, double r) {
  if (!(prior > 0.0 && prior < 1.0)) {
    throw DomainError("prior must lie in (0, 1), got " + fmt(prior));
  }
  return 1.0 / (1.0 + std::exp(-epsilon * r) * (1.0 - prior) / prior);
}

}  // namespace dpdfg
