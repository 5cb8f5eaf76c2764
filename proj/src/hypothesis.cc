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

#include "vizentropy/hypothesis.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "boost/math/distributions/students_t.hpp"
#include "vizentropy/error.h"

namespace vizentropy {
namespace {

TTestResult Finish(double mean_difference, double se, double df) {
  TTestResult r;
  r.mean_difference = mean_difference;
  r.df = df;
  if (se == 0.0) {
    if (mean_difference != 0.0) {
      throw Error(ErrorCode::kInfiniteT,
                  "zero-variance differences with non-zero mean");
    }
    r.t = 0.0;
    r.p = 1.0;
    return r;
  }
  r.t = mean_difference / se;
  const boost::math::students_t_distribution<double> dist(df);
  r.p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t)));
  return r;
}

void RequireTwo(std::span<const double> v, const char* name) {
  if (v.size() < 2) {
    throw Error(ErrorCode::kTooFewSamples,
                std::string(name) + " has " + std::to_string(v.size()) +
                    " values, need 2");
  }
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " has a non-finite value");
    }
  }
}

}  // namespace

double SampleMean(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double SampleVariance(std::span<const double> values) {
  const double mean = SampleMean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

TTestResult TTest(std::span<const double> a, std::span<const double> b,
                  TTestKind kind) {
  if (kind == TTestKind::kPaired && a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                    " paired values");
  }
  RequireTwo(a, "a");
  RequireTwo(b, "b");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  switch (kind) {
    case TTestKind::kPaired: {
      std::vector<double> diff(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
      const double se = std::sqrt(SampleVariance(diff) / na);
      return Finish(SampleMean(diff), se, na - 1.0);
    }
    case TTestKind::kPooled: {
      const double pooled = ((na - 1.0) * SampleVariance(a) +
                             (nb - 1.0) * SampleVariance(b)) /
                            (na + nb - 2.0);
      const double se = std::sqrt(pooled * (1.0 / na + 1.0 / nb));
      return Finish(SampleMean(a) - SampleMean(b), se, na + nb - 2.0);
    }
    case TTestKind::kWelch: {
      const double va = SampleVariance(a) / na;
      const double vb = SampleVariance(b) / nb;
      const double se = std::sqrt(va + vb);
      const double df = se == 0.0 ? na + nb - 2.0
                                  : (va + vb) * (va + vb) /
                                        (va * va / (na - 1.0) +
                                         vb * vb / (nb - 1.0));
      return Finish(SampleMean(a) - SampleMean(b), se, df);
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown t-test kind");
}

std::vector<bool> RtOutliers(std::span<const double> values,
                             double sd_multiplier) {
  RequireTwo(values, "response times");
  std::vector<bool> flags(values.size(), false);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) return flags;
  const double mean = SampleMean(values);
  const double band = sd_multiplier * std::sqrt(SampleVariance(values));
  for (std::size_t i = 0; i < values.size(); ++i) {
    flags[i] = std::abs(values[i] - mean) > band;
  }
  return flags;
}

}  // namespace vizentropy
