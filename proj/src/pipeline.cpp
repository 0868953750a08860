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

#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "dp_noise.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace dpdfg {
namespace {

struct Calibration {
  Epsilon epsilon;
  double sensitivity = 1.0;
  double edge_delta = 0.0;
  bool degenerate = false;
};

double max_delta_over_occurrences(std::span<const double> priors, Epsilon epsilon,
                                  double r) {
  double worst = 0.0;
  for (double prior : priors) worst = std::max(worst, delta_from_epsilon_time(prior, epsilon, r));
  return worst;
}

Calibration calibrate_p1(const DfgEdge& edge, const DisclosureRequest& request) {
  const RiskParams risk = request.risk_params();
  Calibration c;
  if (request.aggregation == AggregationKind::kFrequency) {
    c.epsilon = Epsilon(epsilon_freq(risk.delta));
    c.edge_delta = delta_from_epsilon_freq(c.epsilon.value());
    return c;
  }
  const EdgeEpsilon ee = edge_epsilon_time(edge, risk);
  c.epsilon = ee.epsilon;
  c.degenerate = ee.degenerate;
  c.sensitivity = sensitivity(request.aggregation, edge.frequency());
  c.edge_delta = max_delta_over_occurrences(ee.priors, ee.epsilon, ee.range);
  return c;
}

Calibration calibrate_p2(const DfgEdge& edge, double true_value,
                         const DisclosureRequest& request) {
  const UtilityParams utility = request.utility_params();
  Calibration c;
  c.sensitivity = sensitivity(request.aggregation, edge.frequency());

  if (request.aggregation == AggregationKind::kFrequency) {
    const double alpha = alpha_per_edge(true_value, utility.mape_target);
    c.epsilon = Epsilon(epsilon_from_alpha(c.sensitivity, alpha, utility.beta));
    c.edge_delta = delta_from_epsilon_freq(c.epsilon.value());
    return c;
  }

  // A zero weight has no relative tolerance; calibrate against the floor.
  const double weight = true_value > 0.0 ? true_value : kTimeWeightFloor;
  const double alpha = alpha_per_edge(weight, utility.mape_target);
  c.epsilon = Epsilon(epsilon_from_alpha(c.sensitivity, alpha, utility.beta));

  const double max_duration = edge_range(edge, request.aggregation);
  const double r = max_duration > 0.0 ? max_duration : 1.0;
  c.degenerate = edge.frequency() == 1 || !(max_duration > 0.0) || !(true_value > 0.0);
  const auto priors = empirical_priors(edge.durations, request.precision, r);
  c.edge_delta = max_delta_over_occurrences(priors, c.epsilon, r);
  return c;
}

double mean(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

DisclosureResult run_disclosure(const Dfg& input, const DisclosureRequest& request,
                                unsigned threads) {
  const auto started = std::chrono::steady_clock::now();
  request.validate();
  const AggregationKind kind = request.aggregation;

  Dfg dfg = disclosed_subgraph(input, kind, request.include_boundary_time);
  if (dfg.edges.empty()) throw DomainError("the graph has no edges to disclose");
  if (is_time_aggregation(kind)) {
    dfg = rescale(dfg, request.time_unit ? *request.time_unit : auto_time_unit(dfg, kind));
  }

  std::vector<const DfgEdge*> edges;
  edges.reserve(dfg.edges.size());
  for (const auto& [key, edge] : dfg.edges) edges.push_back(&edge);

  const unsigned runs = request.runs;
  std::vector<EdgeDisclosure> rows(edges.size());
  // released[run][edge], noisy[run][edge]
  std::vector<std::vector<double>> released(runs, std::vector<double>(edges.size()));
  std::vector<std::vector<double>> noisy(runs, std::vector<double>(edges.size()));

  parallel_for(edges.size(), threads, [&](std::size_t i) {
    const DfgEdge& edge = *edges[i];
    EdgeDisclosure& row = rows[i];
    row.source = edge.source;
    row.target = edge.target;
    row.occurrences = edge.frequency();
    row.true_value = aggregate(edge, kind);

    const Calibration c = request.mode == DisclosureMode::kRiskToUtility
                              ? calibrate_p1(edge, request)
                              : calibrate_p2(edge, row.true_value, request);
    row.epsilon = c.epsilon;
    row.sensitivity = c.sensitivity;
    row.edge_delta = c.edge_delta;
    row.degenerate = c.degenerate;

    const NoiseSpec spec{c.epsilon, c.sensitivity};
    row.noise_scale = spec.scale();
    double ape_total = 0.0;
    for (unsigned run = 0; run < runs; ++run) {
      NoiseStream stream(request.seed, edge.source, edge.target, run);
      const Release rel = release(row.true_value, kind, spec, stream);
      noisy[run][i] = rel.noisy;
      released[run][i] = rel.released;
      if (run == 0) {
        row.noisy_value = rel.noisy;
        row.released_value = rel.released;
      }
      if (row.true_value != 0.0) ape_total += ape(row.true_value, rel.noisy);
    }
    if (row.true_value != 0.0) row.ape = ape_total / runs;
  });

  DisclosureResult result;
  DisclosureReport& report = result.report;
  report.request = request;
  report.time_unit = dfg.unit;
  report.activities.assign(dfg.activities.begin(), dfg.activities.end());

  std::vector<double> actual_nonzero;
  std::vector<std::size_t> nonzero_index;
  std::vector<double> actual_all;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    actual_all.push_back(rows[i].true_value);
    if (rows[i].true_value != 0.0) {
      actual_nonzero.push_back(rows[i].true_value);
      nonzero_index.push_back(i);
    }
  }
  for (unsigned run = 0; run < runs; ++run) {
    if (!actual_nonzero.empty()) {
      std::vector<double> f;
      f.reserve(nonzero_index.size());
      for (std::size_t i : nonzero_index) f.push_back(noisy[run][i]);
      report.run_mape.push_back(mape(actual_nonzero, f));
    }
    report.run_smape.push_back(smape(actual_all, released[run]));
  }
  if (!report.run_mape.empty()) report.mape = mean(report.run_mape);
  report.smape = mean(report.run_smape);

  std::vector<double> deltas;
  std::vector<Epsilon> epsilons;
  for (const auto& row : rows) {
    deltas.push_back(row.edge_delta);
    epsilons.push_back(row.epsilon);
  }
  report.overall_delta = dfg_delta(deltas);
  report.median_epsilon = median_epsilon(std::move(epsilons));

  AnnotatedDfg& annotated = result.annotated;
  annotated.kind = kind;
  for (const auto& row : rows) {
    annotated.weights.emplace(EdgeKey{row.source, row.target}, row.released_value);
  }
  annotated.dfg = std::move(dfg);
  report.edges = std::move(rows);

  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return result;
}

}  // namespace

std::string_view to_string(DisclosureMode mode) {
  return mode == DisclosureMode::kRiskToUtility ? "P1" : "P2";
}

std::optional<DisclosureMode> parse_mode(std::string_view text) {
  if (text == "P1" || text == "p1") return DisclosureMode::kRiskToUtility;
  if (text == "P2" || text == "p2") return DisclosureMode::kUtilityToRisk;
  return std::nullopt;
}

void DisclosureRequest::validate() const {
  if (delta && mape) throw InvalidArgument("delta and MAPE targets are mutually exclusive");
  if (mode == DisclosureMode::kRiskToUtility) {
    if (!delta) throw InvalidArgument("P1 disclosure needs a delta target");
    risk_params().validate();
  } else {
    if (!mape) throw InvalidArgument("P2 disclosure needs a MAPE target");
    utility_params().validate();
    RiskParams{0.5, precision}.validate();
  }
  if (runs == 0) throw InvalidArgument("runs must be at least 1");
}

RiskParams DisclosureRequest::risk_params() const {
  return RiskParams{delta.value_or(0.0), precision};
}

UtilityParams DisclosureRequest::utility_params() const {
  return UtilityParams{mape.value_or(0.0), beta};
}

Epsilon median_epsilon(std::vector<Epsilon> values) {
  if (values.empty()) throw DomainError("median of no epsilons");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  const Epsilon lo = values[n / 2 - 1];
  const Epsilon hi = values[n / 2];
  if (hi.is_unbounded()) return Epsilon::unbounded();
  return Epsilon((lo.value() + hi.value()) / 2.0);
}

DisclosureResult disclose(const Dfg& dfg, const DisclosureRequest& request,
                          unsigned threads) {
  return run_disclosure(dfg, request, threads);
}

DisclosureResult disclose_p1(const Dfg& dfg, const DisclosureRequest& request,
                             unsigned threads) {
  if (request.mode != DisclosureMode::kRiskToUtility) {
    throw InvalidArgument("disclose_p1 called with a P2 request");
  }
  return run_disclosure(dfg, request, threads);
}

DisclosureResult disclose_p2(const Dfg& dfg, const DisclosureRequest& request,
                             unsigned threads) {
  if (request.mode != DisclosureMode::kUtilityToRisk) {
    throw InvalidArgument("disclose_p2 called with a P1 request");
  }
  return run_disclosure(dfg, request, threads);
}

}  // namespace dpdfg
