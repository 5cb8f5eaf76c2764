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

#include "vizentropy/bradley_terry.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <utility>

#include "Eigen/Dense"
#include "vizentropy/error.h"
#include "vizentropy/normal.h"

namespace vizentropy {
namespace {

double Sigmoid(double eta) {
  if (eta >= 0.0) return 1.0 / (1.0 + std::exp(-eta));
  const double e = std::exp(eta);
  return e / (1.0 + e);
}

// x * log(x / expected), with 0 log 0 = 0.
double DevianceTerm(double observed, double expected) {
  if (observed <= 0.0) return 0.0;
  return observed * std::log(observed / expected);
}

struct IndexedRow {
  int left;
  int right;
  double wins;    // left chosen
  double losses;  // right chosen
};

void ValidateTable(const PairComparisonTable& table) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const PairRow& row : table.rows) {
    if (row.left == row.right) {
      throw Error(ErrorCode::kSelfPair, "row compares '" + row.left +
                                            "' with itself");
    }
    if (row.chose_left < 0 || row.chose_right < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative count in row " +
                                                   row.left + "-" + row.right);
    }
    auto key = std::minmax(row.left, row.right);
    if (!seen.emplace(key.first, key.second).second) {
      throw Error(ErrorCode::kDuplicatePair,
                  "pair " + row.left + "-" + row.right +
                      " appears more than once; merge duplicates first");
    }
  }
}

// Items reachable from `start` along directed edges.
std::vector<bool> ReachableFrom(int start,
                                const std::vector<std::vector<int>>& edges) {
  std::vector<bool> reached(edges.size(), false);
  std::queue<int> frontier;
  frontier.push(start);
  reached[start] = true;
  while (!frontier.empty()) {
    const int at = frontier.front();
    frontier.pop();
    for (int next : edges[at]) {
      if (!reached[next]) {
        reached[next] = true;
        frontier.push(next);
      }
    }
  }
  return reached;
}

}  // namespace

std::vector<std::string> PairComparisonTable::Items() const {
  std::set<std::string> ids;
  for (const PairRow& row : rows) {
    ids.insert(row.left);
    ids.insert(row.right);
  }
  return {ids.begin(), ids.end()};
}

PairComparisonTable MergeDuplicates(std::span<const PairTrial> trials) {
  struct Accumulator {
    std::int64_t first_wins = 0;
    std::int64_t second_wins = 0;
    std::vector<double> rts;
  };
  std::map<std::pair<std::string, std::string>, Accumulator> pairs;
  for (const PairTrial& t : trials) {
    if (t.left == t.right) {
      throw Error(ErrorCode::kSelfPair, "trial pairs '" + t.left +
                                            "' with itself");
    }
    if (!std::isfinite(t.rt)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite response time");
    }
    const std::string& winner = t.choice == Choice::kLeft ? t.left : t.right;
    auto key = std::minmax(t.left, t.right);
    Accumulator& acc = pairs[{key.first, key.second}];
    (winner == key.first ? acc.first_wins : acc.second_wins) += 1;
    acc.rts.push_back(t.rt);
  }
  PairComparisonTable table;
  for (auto& [key, acc] : pairs) {
    std::sort(acc.rts.begin(), acc.rts.end());
    double sum = 0.0;
    for (double rt : acc.rts) sum += rt;
    table.rows.push_back(PairRow{key.first, key.second, acc.first_wins,
                                 acc.second_wins,
                                 sum / static_cast<double>(acc.rts.size())});
  }
  return table;
}

double BtWinProbability(double ability_i, double ability_j) {
  return Sigmoid(ability_i - ability_j);
}

double BtLogLikelihood(const PairComparisonTable& table,
                       std::span<const double> abilities) {
  const std::vector<std::string> items = table.Items();
  if (abilities.size() != items.size()) {
    throw Error(ErrorCode::kLengthMismatch, "one ability per item expected");
  }
  auto index = [&](const std::string& id) {
    return std::lower_bound(items.begin(), items.end(), id) - items.begin();
  };
  double ll = 0.0;
  for (const PairRow& row : table.rows) {
    const double eta = abilities[index(row.left)] - abilities[index(row.right)];
    // log sigmoid(eta) and log sigmoid(-eta), overflow safe.
    const double log_p = -std::log1p(std::exp(-std::abs(eta))) +
                         std::min(eta, 0.0);
    const double log_q = log_p - eta;
    ll += row.chose_left * log_p + row.chose_right * log_q;
  }
  return ll;
}

const BtCoefficient& BtResult::Coefficient(std::string_view item) const {
  for (const BtCoefficient& c : coefficients) {
    if (c.item == item) return c;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no coefficient for '" + std::string(item) + "'");
}

double BtResult::WinProbability(std::string_view i, std::string_view j) const {
  return BtWinProbability(Ability(i), Ability(j));
}

BtResult FitBradleyTerry(const PairComparisonTable& table,
                         std::string_view reference,
                         const BtOptions& options) {
  ValidateTable(table);
  const std::vector<std::string> items = table.Items();
  const auto ref_it = std::find(items.begin(), items.end(), reference);
  if (ref_it == items.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "reference '" + std::string(reference) + "' not in table");
  }
  const int n_items = static_cast<int>(items.size());
  const int ref = static_cast<int>(ref_it - items.begin());
  auto index = [&](const std::string& id) {
    return static_cast<int>(std::lower_bound(items.begin(), items.end(), id) -
                            items.begin());
  };

  std::vector<IndexedRow> rows;
  std::vector<std::vector<int>> adjacency(n_items);
  std::vector<std::vector<int>> beat(n_items);  // i -> j: i won at least once
  for (const PairRow& row : table.rows) {
    if (row.chose_left + row.chose_right == 0) continue;
    IndexedRow r{index(row.left), index(row.right),
                 static_cast<double>(row.chose_left),
                 static_cast<double>(row.chose_right)};
    adjacency[r.left].push_back(r.right);
    adjacency[r.right].push_back(r.left);
    if (r.wins > 0) beat[r.left].push_back(r.right);
    if (r.losses > 0) beat[r.right].push_back(r.left);
    rows.push_back(r);
  }

  const std::vector<bool> reached = ReachableFrom(ref, adjacency);
  for (int i = 0; i < n_items; ++i) {
    if (!reached[i]) {
      throw Error(ErrorCode::kDisconnectedGraph,
                  "'" + items[i] + "' is not connected to reference '" +
                      std::string(reference) + "'");
    }
  }

  // Free parameters are every ability except the reference's.
  auto param = [&](int item) { return item < ref ? item : item - 1; };
  const int n_params = n_items - 1;
  Eigen::VectorXd ability = Eigen::VectorXd::Zero(n_items);

  auto gradient_and_information = [&](Eigen::VectorXd* grad,
                                      Eigen::MatrixXd* info) {
    grad->setZero(n_params);
    info->setZero(n_params, n_params);
    for (const IndexedRow& r : rows) {
      const double n = r.wins + r.losses;
      const double p = Sigmoid(ability[r.left] - ability[r.right]);
      const double resid = r.wins - n * p;
      const double weight = n * p * (1.0 - p);
      if (r.left != ref) {
        (*grad)[param(r.left)] += resid;
        (*info)(param(r.left), param(r.left)) += weight;
      }
      if (r.right != ref) {
        (*grad)[param(r.right)] -= resid;
        (*info)(param(r.right), param(r.right)) += weight;
      }
      if (r.left != ref && r.right != ref) {
        (*info)(param(r.left), param(r.right)) -= weight;
        (*info)(param(r.right), param(r.left)) -= weight;
      }
    }
  };

  Eigen::VectorXd grad;
  Eigen::MatrixXd info;
  int iterations = 0;
  bool converged = n_params == 0;
  while (!converged && iterations < options.max_iterations) {
    ++iterations;
    gradient_and_information(&grad, &info);
    const Eigen::VectorXd step = info.ldlt().solve(grad);
    if (!step.allFinite()) break;
    for (int i = 0; i < n_items; ++i) {
      if (i != ref) ability[i] += step[param(i)];
    }
    if (!ability.allFinite()) break;
    converged = step.cwiseAbs().maxCoeff() < options.tolerance;
  }
  gradient_and_information(&grad, &info);
  // Finite estimates need every item to both beat and lose to the rest
  // through some chain of wins; otherwise the likelihood keeps rising as an
  // ability runs off to infinity and Newton's tiny steps look converged.
  std::vector<std::vector<int>> lost_to(n_items);
  for (int i = 0; i < n_items; ++i) {
    for (int j : beat[i]) lost_to[j].push_back(i);
  }
  const std::vector<bool> down = ReachableFrom(ref, beat);
  const std::vector<bool> up = ReachableFrom(ref, lost_to);
  const bool separated = std::find(down.begin(), down.end(), false) !=
                             down.end() ||
                         std::find(up.begin(), up.end(), false) != up.end();
  if (!converged || separated) {
    throw Error(ErrorCode::kNonConvergence,
                std::string(separated ? "abilities diverge (some items never "
                                        "lose or never win against the rest); "
                                      : "") +
                    "after " + std::to_string(iterations) +
                    " iterations, gradient norm " +
                    std::to_string(grad.norm()));
  }

  Eigen::MatrixXd covariance =
      n_params > 0 ? Eigen::MatrixXd(info.ldlt().solve(
                         Eigen::MatrixXd::Identity(n_params, n_params)))
                   : Eigen::MatrixXd();

  BtResult result;
  result.reference = std::string(reference);
  result.iterations = iterations;
  result.coefficients.push_back(BtCoefficient{items[ref], 0.0, {}, {}, {}});
  for (int i = 0; i < n_items; ++i) {
    if (i == ref) continue;
    BtCoefficient c;
    c.item = items[i];
    c.ability = ability[i];
    const double var = covariance(param(i), param(i));
    if (var > 0.0 && std::isfinite(var)) {
      c.std_error = std::sqrt(var);
      c.z_value = c.ability / *c.std_error;
      c.p_value = TwoSidedNormalP(*c.z_value);
    }
    result.coefficients.push_back(std::move(c));
  }

  for (const IndexedRow& r : rows) {
    const double n = r.wins + r.losses;
    const double p = Sigmoid(ability[r.left] - ability[r.right]);
    result.residual_deviance +=
        2.0 * (DevianceTerm(r.wins, n * p) + DevianceTerm(r.losses, n * (1 - p)));
    result.null_deviance +=
        2.0 * (DevianceTerm(r.wins, 0.5 * n) + DevianceTerm(r.losses, 0.5 * n));
  }
  result.null_df = static_cast<int>(rows.size());
  result.residual_df = static_cast<int>(rows.size()) - n_params;
  if (result.null_deviance > 0.0) {
    result.pseudo_r2 = 1.0 - result.residual_deviance / result.null_deviance;
  }
  return result;
}

std::string FormatPValue(double p) {
  if (p < std::numeric_limits<double>::epsilon()) return "< 2e-16";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2E", p);
  return buf;
}

std::string FormatPairTable(const PairComparisonTable& table) {
  std::string out =
      "Left glyph  Right glyph  Chose left  Chose right  mean RT (seconds)\n";
  char buf[160];
  for (const PairRow& row : table.rows) {
    std::snprintf(buf, sizeof(buf), "%-10s  %-11s  %10lld  %11lld  ",
                  row.left.c_str(), row.right.c_str(),
                  static_cast<long long>(row.chose_left),
                  static_cast<long long>(row.chose_right));
    out += buf;
    if (row.mean_rt) {
      std::snprintf(buf, sizeof(buf), "%17.2f\n", *row.mean_rt);
      out += buf;
    } else {
      out += "                -\n";
    }
  }
  return out;
}

std::string FormatBtTable(const BtResult& result) {
  std::string out = "Glyph     Ability  Std Error   z value  Pr(>|z|)\n";
  char buf[160];
  for (const BtCoefficient& c : result.coefficients) {
    if (!c.std_error) {
      std::snprintf(buf, sizeof(buf), "%-6s  %9.4f\n", c.item.c_str(),
                    c.ability);
    } else {
      std::snprintf(buf, sizeof(buf), "%-6s  %9.4f  %9.4f  %8.3f  %s\n",
                    c.item.c_str(), c.ability, *c.std_error, *c.z_value,
                    FormatPValue(*c.p_value).c_str());
    }
    out += buf;
  }
  std::snprintf(buf, sizeof(buf),
                "\nNull deviance: %.3f on %d df\nResidual deviance: %.3f on "
                "%d df\n",
                result.null_deviance, result.null_df, result.residual_deviance,
                result.residual_df);
  out += buf;
  if (result.pseudo_r2) {
    std::snprintf(buf, sizeof(buf), "Pseudo R-squared: %.1f%%\n",
                  100.0 * *result.pseudo_r2);
    out += buf;
  }
  return out;
}

}  // namespace vizentropy
