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

#include <gtest/gtest.h>

#include <cmath>

#include "error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dpdfg {
namespace {

// Reference values below were computed with 30-digit arbitrary precision.

TEST(RiskModel, FrequencyEpsilon) {
  EXPECT_NEAR(epsilon_freq(0.4), 1.69459572077440722742, 1e-13);
  EXPECT_NEAR(epsilon_freq(0.1), 0.40134139092430232254, 1e-13);
  EXPECT_NEAR(delta_from_epsilon_freq(1.69459572077440722742), 0.4, 1e-13);
}

TEST(RiskModel, WorkedTimeEdge) {
  const auto e = fixture::edge("A", "C", {1, 6, 15});
  const EdgeEpsilon ee = edge_epsilon_time(e, RiskParams{0.4, 0.1});
  ASSERT_EQ(ee.priors.size(), 3u);
  for (double p : ee.priors) EXPECT_DOUBLE_EQ(p, 1.0 / 3.0);
  EXPECT_NEAR(ee.epsilon.value(), 0.11364987281589501564, 1e-13);
  EXPECT_EQ(ee.range, 15.0);
  EXPECT_FALSE(ee.degenerate);
}

TEST(RiskModel, SingleOccurrenceFallsBackToWorstCasePrior) {
  const auto e = fixture::edge("A", "D", {7});
  const EdgeEpsilon ee = edge_epsilon_time(e, RiskParams{0.4, 0.1});
  EXPECT_TRUE(ee.degenerate);
  EXPECT_DOUBLE_EQ(ee.priors[0], 0.3);
  EXPECT_NEAR(ee.epsilon.value(), 0.24208510296777246106, 1e-13);
}

TEST(RiskModel, ZeroRangeUsesUnitRange) {
  const auto e = fixture::edge("A", "A", {0, 0, 0});
  const EdgeEpsilon ee = edge_epsilon_time(e, RiskParams{0.4, 0.5});
  EXPECT_TRUE(ee.degenerate);
  EXPECT_EQ(ee.range, 1.0);
  EXPECT_NEAR(ee.epsilon.value(), epsilon_freq(0.4) / 1.0, 1e-13);
}

TEST(RiskModel, PriorOfOneIsUnbounded) {
  // p = 1 puts every duration in every window.
  const auto e = fixture::edge("A", "B", {1, 2, 3});
  const EdgeEpsilon ee = edge_epsilon_time(e, RiskParams{0.4, 1.0});
  EXPECT_TRUE(ee.epsilon.is_unbounded());
  EXPECT_EQ(delta_from_epsilon_time(1.0, ee.epsilon, 3.0), 0.0);
}

TEST(RiskModel, EpsilonUnboundedWhenPriorPlusDeltaReachesOne) {
  EXPECT_TRUE(epsilon_from_delta(0.7, 0.3, 1.0).is_unbounded());
  EXPECT_TRUE(epsilon_from_delta(0.9, 0.3, 1.0).is_unbounded());
  EXPECT_FALSE(epsilon_from_delta(0.69, 0.3, 1.0).is_unbounded());
  EXPECT_TRUE(Epsilon(5.0) < Epsilon::unbounded());
}

TEST(RiskModel, DomainErrors) {
  EXPECT_THROW(epsilon_from_delta(0.0, 0.4, 1.0), DomainError);
  EXPECT_THROW(epsilon_from_delta(1.0, 0.4, 1.0), DomainError);
  EXPECT_THROW(epsilon_from_delta(0.3, 0.4, 0.0), DomainError);
  EXPECT_THROW((RiskParams{0.0, 0.5}.validate()), DomainError);
  EXPECT_THROW((RiskParams{1.0, 0.5}.validate()), DomainError);
  EXPECT_THROW((RiskParams{0.4, 1.5}.validate()), DomainError);
  EXPECT_THROW(empirical_prior(std::vector<double>{1.0}, 1.0, 0.5, 0.0), DomainError);
  EXPECT_THROW(dfg_delta(std::vector<double>{}), DomainError);
}

TEST(RiskModel, PosteriorBound) {
  EXPECT_NEAR(posterior_bound(0.3, 2.0 * std::log(7.0 / 3.0), 1.0), 0.7, 1e-15);
  EXPECT_NEAR(posterior_bound(0.25, 0.0, 4.0), 0.25, 1e-15);
}

TEST(RiskModel, AgreesWithTextbookFormulas) {
  gen::Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    const double P = rng.uniform(0.01, 0.95);
    const double delta = rng.uniform(0.01, 0.99 - P);
    const double r = rng.log_uniform(0.01, 1000.0);
    const double eps = epsilon_from_delta(P, delta, r).value();
    EXPECT_NEAR(eps, oracle::epsilon_from_delta(P, delta, r), 1e-9 * eps);
    const double e2 = rng.log_uniform(1e-3, 10.0) / r;
    EXPECT_NEAR(delta_from_epsilon_time(P, e2, r), oracle::delta_time(P, e2, r), 1e-12);
    const double ef = rng.log_uniform(1e-3, 50.0);
    EXPECT_NEAR(delta_from_epsilon_freq(ef), oracle::delta_freq(ef), 1e-14);
  }
}

TEST(RiskModel, SortedPriorsMatchLinearScan) {
  gen::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    std::vector<double> d = rng.durations(1 + rng.index(60), 0.0, 100.0);
    // Duplicates exercise closed window ends.
    if (rng.coin()) d.push_back(d[rng.index(d.size())]);
    const double r = *std::max_element(d.begin(), d.end());
    const double p = rng.uniform(0.0, 1.0);
    const auto fast = empirical_priors(d, p, r);
    for (std::size_t k = 0; k < d.size(); ++k) {
      EXPECT_DOUBLE_EQ(fast[k], oracle::prior(d, d[k], p, r));
      EXPECT_DOUBLE_EQ(fast[k], empirical_prior(d, d[k], p, r));
    }
  }
}

TEST(RiskModel, WindowIsClosed) {
  // |6 - 1| == 0.5 * 10 exactly.
  const std::vector<double> d = {1, 6, 10};
  EXPECT_DOUBLE_EQ(empirical_prior(d, 1.0, 0.5, 10.0), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(empirical_prior(d, 6.0, 0.5, 10.0), 1.0);
}

TEST(RiskModel, EdgeEpsilonIsMinimumOverOccurrences) {
  const auto e = fixture::edge("C", "D", {0.2, 0.25, 0.4, 1.5, 2.6, 3.65, 4.7, 6});
  const EdgeEpsilon ee = edge_epsilon_time(e, RiskParams{0.2, 0.1});
  EXPECT_EQ(ee.epsilon, *std::min_element(ee.per_occurrence.begin(), ee.per_occurrence.end()));
  for (std::size_t k = 0; k < ee.priors.size(); ++k) {
    EXPECT_LE(delta_from_epsilon_time(ee.priors[k], ee.epsilon, ee.range), 0.2 + 1e-12);
  }
}

}  // namespace
}  // namespace dpdfg
