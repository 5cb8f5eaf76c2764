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

#include "vizentropy/sdt.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "vizentropy/error.h"
#include "vizentropy/normal.h"

namespace vizentropy {

SdtCorrection ParseSdtCorrection(std::string_view name) {
  if (name == "none") return SdtCorrection::kNone;
  if (name == "half_count") return SdtCorrection::kHalfCount;
  if (name == "loglinear") return SdtCorrection::kLogLinear;
  if (name == "psycho") return SdtCorrection::kPsycho;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown correction '" + std::string(name) + "'");
}

std::string_view SdtCorrectionName(SdtCorrection correction) {
  switch (correction) {
    case SdtCorrection::kNone: return "none";
    case SdtCorrection::kHalfCount: return "half_count";
    case SdtCorrection::kLogLinear: return "loglinear";
    case SdtCorrection::kPsycho: return "psycho";
  }
  return "";
}

SdtResult SdtMetrics(const SdtCounts& counts, SdtCorrection correction) {
  if (counts.hits < 0 || counts.misses < 0 || counts.false_alarms < 0 ||
      counts.correct_rejections < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative count");
  }
  if (counts.present() == 0 || counts.absent() == 0) {
    throw Error(ErrorCode::kEmptyCondition,
                "need both target-present and target-absent trials");
  }
  const double hits = static_cast<double>(counts.hits);
  const double fas = static_cast<double>(counts.false_alarms);
  const double n_present = static_cast<double>(counts.present());
  const double n_absent = static_cast<double>(counts.absent());

  SdtResult r;
  const double h = hits / n_present;
  const double f = fas / n_absent;
  r.hit_rate = h;
  r.false_alarm_rate = f;

  const bool extreme = h == 0.0 || h == 1.0 || f == 0.0 || f == 1.0;
  double ha = h;
  double fa = f;
  switch (correction) {
    case SdtCorrection::kNone:
      if (extreme) {
        throw Error(ErrorCode::kExtremeRates,
                    "hit or false-alarm rate is 0 or 1; choose a correction");
      }
      break;
    case SdtCorrection::kHalfCount:
      if (extreme) {
        ha = (hits + 0.5) / (n_present + 1.0);
        fa = (fas + 0.5) / (n_absent + 1.0);
      }
      break;
    case SdtCorrection::kLogLinear:
      ha = (hits + 0.5) / (n_present + 1.0);
      fa = (fas + 0.5) / (n_absent + 1.0);
      break;
    case SdtCorrection::kPsycho:
      ha = (hits + 0.5) / (n_present + 1.5);
      fa = (fas + 0.5) / (n_absent + 1.5);
      break;
  }
  r.adjusted_hit_rate = ha;
  r.adjusted_false_alarm_rate = fa;

  const double zh = NormalQuantile(ha);
  const double zf = NormalQuantile(fa);
  r.d_prime = zh - zf;
  r.beta = std::exp(0.5 * (zf * zf - zh * zh));

  const double d = h - f;
  if (d == 0.0) {
    r.a_prime = 0.5;
  } else {
    const double sign = d > 0.0 ? 1.0 : -1.0;
    r.a_prime = 0.5 + sign * (d * d + std::abs(d)) /
                          (4.0 * std::max(h, f) * (1.0 - std::min(h, f)));
  }
  const double den = (1.0 - h) * (1.0 - f) + h * f;
  r.b_double_prime_d = den == 0.0 ? 0.0 : ((1.0 - h) * (1.0 - f) - h * f) / den;
  return r;
}

}  // namespace vizentropy
