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

#include "vizentropy/regression.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "Eigen/Dense"
#include "boost/math/distributions/fisher_f.hpp"
#include "vizentropy/error.h"

namespace vizentropy {

RegressionResult FitOls(std::span<const double> x, std::span<const double> y,
                        int degree) {
  if (degree != 1 && degree != 2) {
    throw Error(ErrorCode::kInvalidArgument, "degree must be 1 or 2");
  }
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(x.size()) + " x values vs " +
                    std::to_string(y.size()) + " y values");
  }
  const int n = static_cast<int>(x.size());
  const int p = degree + 1;
  if (n < degree + 2) {
    throw Error(ErrorCode::kTooFewSamples,
                std::to_string(n) + " points for a degree " +
                    std::to_string(degree) + " fit");
  }
  Eigen::MatrixXd design(n, p);
  Eigen::VectorXd response(n);
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "non-finite value at point " + std::to_string(i));
    }
    design(i, 0) = 1.0;
    design(i, 1) = x[i];
    if (degree == 2) design(i, 2) = x[i] * x[i];
    response[i] = y[i];
  }
  const double y_mean = response.mean();
  const double sst = (response.array() - y_mean).square().sum();
  if (sst == 0.0) {
    throw Error(ErrorCode::kDegenerateInput, "response is constant");
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < p) {
    throw Error(ErrorCode::kSingularDesign,
                "design matrix has rank " + std::to_string(qr.rank()) +
                    " < " + std::to_string(p));
  }
  const Eigen::VectorXd beta = qr.solve(response);
  const Eigen::VectorXd fitted = design * beta;
  const Eigen::VectorXd resid = response - fitted;
  const double sse = resid.squaredNorm();

  RegressionResult out;
  out.coefficients.assign(beta.data(), beta.data() + p);
  out.fitted.assign(fitted.data(), fitted.data() + n);
  out.residuals.assign(resid.data(), resid.data() + n);
  out.r_squared = std::clamp(1.0 - sse / sst, 0.0, 1.0);
  out.df_model = p - 1;
  out.df_residual = n - p;
  const double ssr = std::max(sst - sse, 0.0);
  if (sse == 0.0) {
    out.f_statistic = std::numeric_limits<double>::infinity();
    out.f_p_value = 0.0;
  } else {
    out.f_statistic =
        (ssr / out.df_model) / (sse / static_cast<double>(out.df_residual));
    const boost::math::fisher_f_distribution<double> f(out.df_model,
                                                       out.df_residual);
    out.f_p_value =
        boost::math::cdf(boost::math::complement(f, out.f_statistic));
  }
  return out;
}

}  // namespace vizentropy
