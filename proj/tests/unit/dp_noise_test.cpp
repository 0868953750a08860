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

#include "dp_noise.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "error.hpp"

namespace dpdfg {
namespace {

TEST(DpNoise, Sensitivity) {
  EXPECT_EQ(sensitivity(AggregationKind::kFrequency, 7), 1.0);
  EXPECT_EQ(sensitivity(AggregationKind::kSum, 7), 1.0);
  EXPECT_EQ(sensitivity(AggregationKind::kMin, 7), 1.0);
  EXPECT_EQ(sensitivity(AggregationKind::kMax, 7), 1.0);
  EXPECT_DOUBLE_EQ(sensitivity(AggregationKind::kAvg, 4), 0.25);
  EXPECT_THROW(sensitivity(AggregationKind::kAvg, 0), DomainError);
}

TEST(DpNoise, InverseCdf) {
  EXPECT_EQ(laplace_from_uniform(2.0, 0.0), 0.0);
  // F^-1(3/4) = b ln 2 for Laplace(0, b).
  EXPECT_NEAR(laplace_from_uniform(2.0, 0.25), 2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(laplace_from_uniform(2.0, -0.25), -2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(laplace_from_uniform(1.0, 0.45), std::log(10.0), 1e-14);
  EXPECT_TRUE(std::isfinite(laplace_from_uniform(1.0, 0.5 - 0x1.0p-53)));
}

TEST(DpNoise, StreamsAreKeyedAndReproducible) {
  NoiseStream a(1, "A", "B", 0);
  NoiseStream b(1, "A", "B", 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_centered_uniform(), b.next_centered_uniform());

  std::set<std::uint64_t> seeds;
  seeds.insert(derive_stream_seed(1, "A", "B", 0));
  seeds.insert(derive_stream_seed(2, "A", "B", 0));
  seeds.insert(derive_stream_seed(1, "B", "A", 0));
  seeds.insert(derive_stream_seed(1, "A", "B", 1));
  seeds.insert(derive_stream_seed(1, "AB", "", 0));
  EXPECT_EQ(seeds.size(), 5u);
}

TEST(DpNoise, UniformStaysInOpenInterval) {
  NoiseStream s(99, "x", "y", 3);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.next_centered_uniform();
    ASSERT_GT(u, -0.5);
    ASSERT_LT(u, 0.5);
  }
}

TEST(DpNoise, LaplaceMoments) {
  NoiseStream s(5, "m", "n", 0);
  const double b = 3.0;
  const int n = 200000;
  double sum = 0.0;
  double abs_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = sample_laplace(b, s);
    sum += x;
    abs_sum += std::fabs(x);
  }
  // E|X| = b, Var X = 2 b^2.
  EXPECT_NEAR(sum / n, 0.0, 4.0 * std::sqrt(2.0) * b / std::sqrt(n));
  EXPECT_NEAR(abs_sum / n, b, 4.0 * b / std::sqrt(n));
}

TEST(DpNoise, PostProcessing) {
  EXPECT_EQ(release_with_noise(5.0, AggregationKind::kFrequency, 0.6).released, 6.0);
  EXPECT_EQ(release_with_noise(5.0, AggregationKind::kFrequency, -9.0).released, 1.0);
  EXPECT_EQ(release_with_noise(5.0, AggregationKind::kFrequency, -9.0).noisy, -4.0);
  EXPECT_EQ(release_with_noise(2.0, AggregationKind::kMax, -5.0).released, kTimeWeightFloor);
  EXPECT_EQ(release_with_noise(2.0, AggregationKind::kMax, 0.25).released, 2.25);
}

TEST(DpNoise, UnboundedEpsilonReleasesExactValue) {
  NoiseStream s(1, "a", "b", 0);
  const NoiseSpec spec{Epsilon::unbounded(), 1.0};
  EXPECT_EQ(spec.scale(), 0.0);
  EXPECT_EQ(release(7.0, AggregationKind::kFrequency, spec, s).released, 7.0);
  EXPECT_EQ(release(0.0, AggregationKind::kSum, spec, s).released, kTimeWeightFloor);
}

TEST(DpNoise, ScaleIsSensitivityOverEpsilon) {
  EXPECT_DOUBLE_EQ((NoiseSpec{Epsilon(0.5), 0.25}.scale()), 0.5);
  EXPECT_THROW(
      {
        NoiseStream s(1, "a", "b", 0);
        sample_laplace(-1.0, s);
      },
      DomainError);
}

}  // namespace
}  // namespace dpdfg
