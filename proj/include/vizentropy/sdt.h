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

#ifndef VIZENTROPY_SDT_H_
#define VIZENTROPY_SDT_H_

#include <cstdint>
#include <string_view>

namespace vizentropy {

struct SdtCounts {
  std::int64_t hits = 0;
  std::int64_t misses = 0;
  std::int64_t false_alarms = 0;
  std::int64_t correct_rejections = 0;

  std::int64_t present() const { return hits + misses; }
  std::int64_t absent() const { return false_alarms + correct_rejections; }

  friend bool operator==(const SdtCounts&, const SdtCounts&) = default;
};

// How hit and false-alarm rates are nudged away from 0 and 1 before taking
// normal quantiles.
enum class SdtCorrection {
  kNone,       // raw rates; an extreme rate is an error
  kHalfCount,  // only if a rate is 0 or 1: (count + 0.5) / (N + 1), both rates
  kLogLinear,  // always: (count + 0.5) / (N + 1)
  kPsycho,     // always: (count + 0.5) / (N + 1.5), as the R psycho package
};

SdtCorrection ParseSdtCorrection(std::string_view name);
std::string_view SdtCorrectionName(SdtCorrection correction);

struct SdtResult {
  double hit_rate = 0.0;  // raw
  double false_alarm_rate = 0.0;
  double adjusted_hit_rate = 0.0;  // what d' and beta are computed from
  double adjusted_false_alarm_rate = 0.0;
  double d_prime = 0.0;
  double beta = 1.0;
  double a_prime = 0.5;
  double b_double_prime_d = 0.0;
};

// d' = z(H) - z(F) and beta = exp((z(F)^2 - z(H)^2) / 2) on the adjusted
// rates; the non-parametric A' and B''d use the raw rates. B''d is 0 when
// its denominator vanishes (H = 1, F = 0 or H = 0, F = 1). Throws
// kEmptyCondition when either trial type has no trials and kExtremeRates
// when kNone meets a rate of 0 or 1.
SdtResult SdtMetrics(const SdtCounts& counts,
                     SdtCorrection correction = SdtCorrection::kHalfCount);

}  // namespace vizentropy

#endif  // VIZENTROPY_SDT_H_
