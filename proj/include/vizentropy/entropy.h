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

#ifndef VIZENTROPY_ENTROPY_H_
#define VIZENTROPY_ENTROPY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vizentropy {

// One polar sample per tenth of a degree. A 360-sample message cannot order
// the frequency-doubling ladder: at 48 cycles the period is 7.5 samples and
// every template match is an exact repeat.
inline constexpr int kDefaultSampleCount = 3600;

// Returns the Shannon entropy in bits of a discrete distribution.
// Zero-probability symbols contribute nothing. Throws kInvalidDistribution
// when any weight is negative or non-finite, or the weights do not sum to 1
// within 1e-9.
double ShannonEntropy(std::span<const double> weights);

// Parameters of a generated sinusoidal message.
struct MessageParams {
  double frequency = 0.0;  // cycles per revolution
  double amplitude = 1.0;
  int sample_count = kDefaultSampleCount;

  friend bool operator==(const MessageParams&, const MessageParams&) = default;
};

// A sampled message. Signals built by GenerateMessage remember their
// generating parameters; signals wrapped from raw data do not.
class Signal {
 public:
  Signal() = default;
  explicit Signal(std::vector<double> samples,
                  std::optional<MessageParams> meta = std::nullopt);

  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const std::optional<MessageParams>& meta() const { return meta_; }

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  std::vector<double> samples_;
  std::optional<MessageParams> meta_;
};

// samples[i] = amplitude * sin(2*pi*frequency*i/sample_count).
// Requires sample_count >= 4, amplitude >= 0 and 0 <= frequency <=
// sample_count/2 (kFrequencyAboveNyquist above that).
Signal GenerateMessage(double frequency, double amplitude,
                       int sample_count = kDefaultSampleCount);

struct SampEnParams {
  int m = 2;            // embedding length
  double r_frac = 0.2;  // tolerance as a fraction of the population SD
};

// Ordered-pair template match counts: `b` for length m, `a` for length m+1.
// Both lengths use the same N-m templates so the counts share a
// normalisation, and self-matches are excluded.
struct TemplateCounts {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const TemplateCounts&, const TemplateCounts&) =
      default;
};

// Counts template matches under the Chebyshev distance with an absolute
// tolerance. Requires samples.size() > m + 1.
TemplateCounts CountTemplateMatches(std::span<const double> samples, int m,
                                    double tolerance);

double PopulationStandardDeviation(std::span<const double> samples);

// SampEn = ln(B/A) with r = r_frac * population SD. A series with zero SD
// scores 0 (the circle glyph has to be scoreable). Throws kSeriesTooShort
// and kNoTemplateMatches when A or B is zero.
double SampleEntropy(std::span<const double> samples,
                     const SampEnParams& params = {});
double SampleEntropy(const Signal& signal, const SampEnParams& params = {});

// Scores each signal with default parameters, preserving order. A failure is
// rethrown with the index of the offending level in the message.
std::vector<double> ScoreLevels(std::span<const Signal> levels);

}  // namespace vizentropy

#endif  // VIZENTROPY_ENTROPY_H_
