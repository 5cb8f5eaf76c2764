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

#ifndef VIZENTROPY_NORMAL_H_
#define VIZENTROPY_NORMAL_H_

namespace vizentropy {

// Standard normal CDF.
double NormalCdf(double z);

// Upper tail 1 - Phi(z), accurate far into the tail.
double NormalUpperTail(double z);

// Two-sided p-value for a standard normal statistic.
double TwoSidedNormalP(double z);

// Inverse standard normal CDF. Acklam's rational approximation refined by a
// Halley step, good to ~1e-15 relative over (0, 1). Returns -inf / +inf at
// p = 0 / 1 and NaN outside [0, 1].
double NormalQuantile(double p);

}  // namespace vizentropy

#endif  // VIZENTROPY_NORMAL_H_
