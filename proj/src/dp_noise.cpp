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

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace dpdfg {
namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

double NoiseSpec::scale() const {
  if (epsilon.is_unbounded()) return 0.0;
  return sensitivity / epsilon.value();
}

double sensitivity(AggregationKind kind, std::size_t occurrence_count) {
  if (occurrence_count == 0) throw DomainError("sensitivity of an empty edge");
  if (kind == AggregationKind::kAvg) return 1.0 / static_cast<double>(occurrence_count);
  return 1.0;
}

std::uint64_t derive_stream_seed(std::uint64_t root_seed, std::string_view source,
                                 std::string_view target, std::uint64_t run_index) {
  std::uint64_t h = splitmix64(root_seed);
  h = splitmix64(h ^ fnv1a64(source));
  h = splitmix64(h ^ fnv1a64(target));
  return splitmix64(h ^ run_index);
}

NoiseStream::NoiseStream(std::uint64_t root_seed, std::string_view source,
                         std::string_view target, std::uint64_t run_index)
    : engine_(derive_stream_seed(root_seed, source, target, run_index)) {}

double NoiseStream::next_centered_uniform() {
  // 53 random bits -> [0, 1); 0 would map to exactly -1/2, so redraw.
  for (;;) {
    const std::uint64_t bits = engine_() >> 11;
    if (bits == 0) continue;
    return static_cast<double>(bits) * 0x1.0p-53 - 0.5;
  }
}

double laplace_from_uniform(double scale, double u) {
  if (scale == 0.0 || u == 0.0) return 0.0;
  const double magnitude = -scale * std::log1p(-2.0 * std::fabs(u));
  return u < 0.0 ? -magnitude : magnitude;
}

double sample_laplace(double scale, NoiseStream& stream) {
  if (!(scale >= 0.0)) throw DomainError("Laplace scale must be non-negative");
  if (scale == 0.0) return 0.0;
  return laplace_from_uniform(scale, stream.next_centered_uniform());
}

Release release_with_noise(double true_value, AggregationKind kind, double noise) {
  Release out;
  out.noisy = true_value + noise;
  if (kind == AggregationKind::kFrequency) {
    out.released = std::max(1.0, std::round(out.noisy));
  } else {
    out.released = std::max(kTimeWeightFloor, out.noisy);
  }
  return out;
}

Release release(double true_value, AggregationKind kind, const NoiseSpec& spec,
                NoiseStream& stream) {
  if (spec.epsilon.is_unbounded()) return release_with_noise(true_value, kind, 0.0);
  return release_with_noise(true_value, kind, sample_laplace(spec.scale(), stream));
}

}  // namespace dpdfg
