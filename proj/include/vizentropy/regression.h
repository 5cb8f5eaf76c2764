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

#ifndef VIZENTROPY_REGRESSION_H_
#define VIZENTROPY_REGRESSION_H_

#include <span>
#include <vector>

namespace vizentropy {

struct RegressionResult {
  std::vector<double> coefficients;  // intercept, x, [x^2]
  double r_squared = 0.0;
  double f_statistic = 0.0;
  int df_model = 0;
  int df_residual = 0;
  double f_p_value = 1.0;
  std::vector<double> residuals;
  std::vector<double> fitted;
};

// Least-squares polynomial fit of degree 1 or 2 with intercept, plus the
// overall F test against the intercept-only model. Needs degree + 2 points
// or more (kTooFewSamples) and finite data. Throws kSingularDesign when the
// design matrix is rank deficient and kDegenerateInput for a constant
// response.
RegressionResult FitOls(std::span<const double> x, std::span<const double> y,
                        int degree = 1);

}  // namespace vizentropy

#endif  // VIZENTROPY_REGRESSION_H_
