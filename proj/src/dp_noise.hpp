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

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "dfg.hpp"
#include "risk_model.hpp"

namespace dpdfg {

// Released time weights never drop below this many time units.
inline constexpr double kTimeWeightFloor = 1e-3;

struct NoiseSpec {
  Epsilon epsilon;
  double sensitivity = 1.0;

  // Laplace scale sensitivity / epsilon; 0 when epsilon is unbounded.
  double scale() const;
};

// Global sensitivity of the annotation query: 1 for frequency, sum, min and
// max; 1/n for the average over n occurrences.
double sensitivity(AggregationKind kind, std::size_t occurrence_count);

// Independent, reproducible uniform stream for one (seed, edge, run) triple.
// The value sequence depends only on those inputs, never on call order
// elsewhere in the program.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t root_seed, std::string_view source, std::string_view target,
              std::uint64_t run_index);

  // Uniform draw from the open interval (-1/2, 1/2).
  double next_centered_uniform();

 private:
  std::mt19937_64 engine_;
};

// Mixes the substream key into a 64-bit engine seed.
std::uint64_t derive_stream_seed(std::uint64_t root_seed, std::string_view source,
                                 std::string_view target, std::uint64_t run_index);

// Inverse CDF: -scale * sign(u) * ln(1 - 2|u|) for u in (-1/2, 1/2).
double laplace_from_uniform(double scale, double u);

double sample_laplace(double scale, NoiseStream& stream);

struct Release {
  double noisy = 0.0;     // true value + noise, before post-processing
  double released = 0.0;  // published weight
};

// Adds noise with the given spec, then post-processes: frequencies are
// rounded and kept >= 1, time weights are kept >= kTimeWeightFloor.
Release release_with_noise(double true_value, AggregationKind kind, double noise);
Release release(double true_value, AggregationKind kind, const NoiseSpec& spec,
                NoiseStream& stream);

}  // namespace dpdfg
