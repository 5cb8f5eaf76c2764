// Copyright 2026 The Vizentropy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vizentropy/entropy.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "vizentropy/error.h"

namespace vizentropy {

double ShannonEntropy(std::span<const double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "no symbols");
  }
  double total = 0.0;
  for (double p : weights) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "weight " + std::to_string(p) + " is not a probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidDistribution,
                "weights sum to " + std::to_string(total));
  }
  double bits = 0.0;
  for (double p : weights) {
    if (p > 0.0) bits -= p * std::log2(p);
  }
  return bits;
}

Signal::Signal(std::vector<double> samples, std::optional<MessageParams> meta)
    : samples_(std::move(samples)), meta_(meta) {}

Signal GenerateMessage(double frequency, double amplitude, int sample_count) {
  if (sample_count < 4) {
    throw Error(ErrorCode::kSeriesTooShort,
                "a message needs at least 4 samples, got " +
                    std::to_string(sample_count));
  }
  if (!std::isfinite(amplitude) || amplitude < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "amplitude must be >= 0");
  }
  if (!std::isfinite(frequency) || frequency < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "frequency must be >= 0");
  }
  if (frequency > sample_count / 2.0) {
    throw Error(ErrorCode::kFrequencyAboveNyquist,
                std::to_string(frequency) + " cycles over " +
                    std::to_string(sample_count) + " samples");
  }
  std::vector<double> samples(sample_count);
  const double step = 2.0 * std::numbers::pi * frequency / sample_count;
  for (int i = 0; i < sample_count; ++i) {
    samples[i] = amplitude * std::sin(step * i);
  }
  return Signal(std::move(samples),
                MessageParams{frequency, amplitude, sample_count});
}

TemplateCounts CountTemplateMatches(std::span<const double> samples, int m,
                                    double tolerance) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  const std::size_t n = samples.size();
  if (n <= static_cast<std::size_t>(m) + 1) {
    throw Error(ErrorCode::kSeriesTooShort,
                std::to_string(n) + " samples for m = " + std::to_string(m));
  }
  const std::size_t templates = n - m;
  const double* x = samples.data();
  TemplateCounts counts;
  for (std::size_t i = 0; i + 1 < templates; ++i) {
    for (std::size_t j = i + 1; j < templates; ++j) {
      int k = 0;
      while (k < m && std::abs(x[i + k] - x[j + k]) <= tolerance) ++k;
      if (k < m) continue;
      ++counts.b;
      if (std::abs(x[i + m] - x[j + m]) <= tolerance) ++counts.a;
    }
  }
  // Each unordered match is two ordered ones.
  counts.a *= 2;
  counts.b *= 2;
  return counts;
}

double PopulationStandardDeviation(std::span<const double> samples) {
  if (samples.empty()) return 0.0;
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= static_cast<double>(samples.size());
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(samples.size()));
}

double SampleEntropy(std::span<const double> samples,
                     const SampEnParams& params) {
  if (params.m < 1 || !(params.r_frac > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "need m >= 1 and r_frac > 0");
  }
  if (samples.size() <= static_cast<std::size_t>(params.m) + 1) {
    throw Error(ErrorCode::kSeriesTooShort,
                std::to_string(samples.size()) + " samples for m = " +
                    std::to_string(params.m));
  }
  const double sd = PopulationStandardDeviation(samples);
  if (sd == 0.0) return 0.0;
  const TemplateCounts counts =
      CountTemplateMatches(samples, params.m, params.r_frac * sd);
  if (counts.a == 0 || counts.b == 0) {
    throw Error(ErrorCode::kNoTemplateMatches,
                "A = " + std::to_string(counts.a) +
                    ", B = " + std::to_string(counts.b));
  }
  return std::log(static_cast<double>(counts.b) /
                  static_cast<double>(counts.a));
}

double SampleEntropy(const Signal& signal, const SampEnParams& params) {
  return SampleEntropy(signal.samples(), params);
}

std::vector<double> ScoreLevels(std::span<const Signal> levels) {
  std::vector<double> scores;
  scores.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    try {
      scores.push_back(SampleEntropy(levels[i]));
    } catch (const Error& e) {
      throw Error(e.code(), "level " + std::to_string(i) + ": " + e.what());
    }
  }
  return scores;
}

}  // namespace vizentropy
