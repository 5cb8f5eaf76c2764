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

#ifndef VIZENTROPY_HYPOTHESIS_H_
#define VIZENTROPY_HYPOTHESIS_H_

#include <span>
#include <vector>

namespace vizentropy {

enum class TTestKind {
  kPaired,  // on the differences a[i] - b[i]
  kPooled,  // two independent samples, equal variances
  kWelch,   // two independent samples, Welch-Satterthwaite df
};

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
  double mean_difference = 0.0;
};

// Student t tests. When the standard error is zero, a zero mean difference
// gives t = 0 and p = 1; any other difference throws kInfiniteT. Paired
// tests need equal lengths (kLengthMismatch) and every test needs at least
// two values per sample (kTooFewSamples).
TTestResult TTest(std::span<const double> a, std::span<const double> b,
                  TTestKind kind);

// Flags values strictly outside mean +/- sd_multiplier * SD, with the
// sample (n - 1) SD. Needs at least two values.
std::vector<bool> RtOutliers(std::span<const double> values,
                             double sd_multiplier = 3.0);

double SampleMean(std::span<const double> values);
double SampleVariance(std::span<const double> values);

}  // namespace vizentropy

#endif  // VIZENTROPY_HYPOTHESIS_H_
