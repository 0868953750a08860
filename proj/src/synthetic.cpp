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

#include "synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "error.hpp"

namespace dpdfg {
namespace {

// 2021-01-01T00:00:00Z
constexpr std::int64_t kEpochStartNs = 1609459200LL * 1'000'000'000LL;
constexpr std::int64_t kNsPerHour = 3'600'000'000'000LL;
constexpr std::size_t kMaxVariantLength = 8;

std::string activity_name(std::size_t index) {
  std::string name;
  do {
    name.insert(name.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  } while (index-- > 0);
  return name;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic shift in [-0.5, 0.5) for the lognormal location of (a, b).
double edge_shift(std::size_t a, std::size_t b) {
  const std::uint64_t h = mix(mix(a) ^ (b + 0x51ed27));
  return static_cast<double>(h % 1000) / 1000.0 - 0.5;
}

std::vector<std::vector<std::size_t>> make_variants(const SyntheticLogSpec& spec,
                                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, spec.alphabet_size - 1);
  const std::size_t max_len = std::min(kMaxVariantLength, spec.alphabet_size + 3);
  std::uniform_int_distribution<std::size_t> length(2, std::max<std::size_t>(2, max_len));

  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> variants;
  // Variant 0 is the main path A, B, C, ... (the most frequent under Zipf).
  if (spec.alphabet_size >= 2) {
    std::vector<std::size_t> main_path(std::min(spec.alphabet_size, kMaxVariantLength));
    for (std::size_t k = 0; k < main_path.size(); ++k) main_path[k] = k;
    seen.insert(main_path);
    variants.push_back(std::move(main_path));
  }
  const std::size_t attempts = 1000 * spec.variant_count + 1000;
  for (std::size_t i = 0; i < attempts && variants.size() < spec.variant_count; ++i) {
    std::vector<std::size_t> v(length(rng));
    for (auto& a : v) a = pick(rng);
    if (seen.insert(v).second) variants.push_back(std::move(v));
  }
  if (variants.size() < spec.variant_count) {
    throw InvalidArgument("cannot form " + std::to_string(spec.variant_count) +
                          " distinct variants over " + std::to_string(spec.alphabet_size) +
                          " activities");
  }
  return variants;
}

}  // namespace

void SyntheticLogSpec::validate() const {
  if (trace_count == 0) throw InvalidArgument("empty log");
  if (alphabet_size == 0) throw InvalidArgument("alphabet_size must be positive");
  if (variant_count == 0) throw InvalidArgument("variant_count must be positive");
  if (distribution == VariantDistribution::kZipf && !(zipf_exponent > 0.0)) {
    throw InvalidArgument("zipf_exponent must be positive");
  }
  if (!std::isfinite(duration_mu)) throw InvalidArgument("duration_mu must be finite");
  if (!(duration_sigma >= 0.0) || !std::isfinite(duration_sigma)) {
    throw InvalidArgument("duration_sigma must be non-negative");
  }
  if (!(outlier_rate >= 0.0 && outlier_rate <= 1.0)) {
    throw InvalidArgument("outlier_rate must lie in [0, 1]");
  }
  if (!(outlier_factor >= 1.0)) throw InvalidArgument("outlier_factor must be >= 1");
}

EventLog generate_log(const SyntheticLogSpec& spec, std::uint64_t seed) {
  spec.validate();
  std::mt19937_64 rng(mix(seed));
  const auto variants = make_variants(spec, rng);

  std::vector<double> weights(variants.size(), 1.0);
  if (spec.distribution == VariantDistribution::kZipf) {
    for (std::size_t k = 0; k < weights.size(); ++k) {
      weights[k] = 1.0 / std::pow(static_cast<double>(k + 1), spec.zipf_exponent);
    }
  }
  std::discrete_distribution<std::size_t> choose(weights.begin(), weights.end());
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const std::size_t width = std::to_string(spec.trace_count).size();
  std::vector<Event> events;
  for (std::size_t t = 0; t < spec.trace_count; ++t) {
    std::string case_id = std::to_string(t + 1);
    case_id.insert(0, width - case_id.size(), '0');
    case_id.insert(0, "case-");

    const auto& variant = variants[choose(rng)];
    double clock_h = static_cast<double>(t);
    for (std::size_t k = 0; k < variant.size(); ++k) {
      Event e;
      e.case_id = case_id;
      e.activity = activity_name(variant[k]);
      if (k > 0) {
        const double mu = spec.duration_mu + edge_shift(variant[k - 1], variant[k]);
        double gap = std::exp(mu + spec.duration_sigma * gauss(rng));
        if (spec.outlier_rate > 0.0 && unit(rng) < spec.outlier_rate) {
          gap *= spec.outlier_factor;
          e.extra_attrs.emplace(kOutlierAttribute, "1");
        }
        clock_h += gap;
      }
      e.timestamp.ns = kEpochStartNs + std::llround(clock_h * static_cast<double>(kNsPerHour));
      events.push_back(std::move(e));
    }
  }
  return EventLog::from_events(std::move(events));
}

std::optional<SyntheticLogSpec> synthetic_profile(std::string_view name) {
  SyntheticLogSpec s;
  if (name == "simple") {
    s.trace_count = 500;
    s.alphabet_size = 6;
    s.variant_count = 1;
    s.duration_sigma = 1.0;
    return s;
  }
  if (name == "skewed") {
    s.trace_count = 1000;
    s.alphabet_size = 8;
    s.variant_count = 25;
    s.distribution = VariantDistribution::kZipf;
    s.zipf_exponent = 1.2;
    s.duration_sigma = 1.0;
    s.outlier_rate = 0.01;
    s.outlier_factor = 50.0;
    return s;
  }
  if (name == "unique") {
    s.trace_count = 1000;
    s.alphabet_size = 10;
    s.variant_count = 1000;
    s.duration_sigma = 1.2;
    return s;
  }
  return std::nullopt;
}

}  // namespace dpdfg
