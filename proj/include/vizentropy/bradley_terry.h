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

#ifndef VIZENTROPY_BRADLEY_TERRY_H_
#define VIZENTROPY_BRADLEY_TERRY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vizentropy {

struct PairRow {
  std::string left;
  std::string right;
  std::int64_t chose_left = 0;
  std::int64_t chose_right = 0;
  std::optional<double> mean_rt;  // seconds

  friend bool operator==(const PairRow&, const PairRow&) = default;
};

// Aggregated paired-comparison counts, at most one row per unordered pair.
struct PairComparisonTable {
  std::vector<PairRow> rows;

  // Sorted distinct item ids.
  std::vector<std::string> Items() const;

  friend bool operator==(const PairComparisonTable&,
                         const PairComparisonTable&) = default;
};

enum class Choice { kLeft, kRight };

// One presentation of a pair to one participant.
struct PairTrial {
  std::string left;
  std::string right;
  Choice choice = Choice::kLeft;
  double rt = 0.0;
};

// Folds AB and BA presentations into one row for the lexicographically
// ordered pair, crediting each choice to the item actually chosen. mean_rt
// is the mean over every trial of the pair. Rows come out sorted.
PairComparisonTable MergeDuplicates(std::span<const PairTrial> trials);

struct BtOptions {
  double tolerance = 1e-10;  // on the largest ability change per iteration
  int max_iterations = 500;
};

struct BtCoefficient {
  std::string item;
  double ability = 0.0;
  // Absent for the reference item, whose ability is pinned at 0.
  std::optional<double> std_error;
  std::optional<double> z_value;
  std::optional<double> p_value;  // two-sided Wald
};

struct BtResult {
  std::string reference;
  std::vector<BtCoefficient> coefficients;  // reference first, then by id
  double null_deviance = 0.0;      // all abilities equal
  double residual_deviance = 0.0;  // against the saturated model
  int null_df = 0;
  int residual_df = 0;
  // 1 - residual/null; absent when the null deviance is 0.
  std::optional<double> pseudo_r2;
  int iterations = 0;

  const BtCoefficient& Coefficient(std::string_view item) const;
  double Ability(std::string_view item) const {
    return Coefficient(item).ability;
  }
  // P(i beats j) under the fitted abilities.
  double WinProbability(std::string_view i, std::string_view j) const;
};

// P(i beats j) = exp(a_i) / (exp(a_i) + exp(a_j)).
double BtWinProbability(double ability_i, double ability_j);

// Maximum-likelihood Bradley-Terry fit by Newton-Raphson (IRLS on the logit
// link) with the reference ability fixed at 0. Standard errors come from the
// inverse observed information. Throws kDisconnectedGraph when some item
// cannot be reached from the reference through compared pairs, and
// kNonConvergence (iterations and gradient norm in the message) when the
// likelihood has no finite maximum.
BtResult FitBradleyTerry(const PairComparisonTable& table,
                         std::string_view reference,
                         const BtOptions& options = {});

// Log-likelihood of the table's counts under the given abilities, ordered
// like table.Items().
double BtLogLikelihood(const PairComparisonTable& table,
                       std::span<const double> abilities);

// R-style p-value text: "< 2e-16" below machine epsilon, else "2.37E-10".
std::string FormatPValue(double p);

// Plain-text tables with fixed columns.
std::string FormatPairTable(const PairComparisonTable& table);
std::string FormatBtTable(const BtResult& result);

}  // namespace vizentropy

#endif  // VIZENTROPY_BRADLEY_TERRY_H_
