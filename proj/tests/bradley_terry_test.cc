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

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vizentropy/error.h"
#include "vizentropy/json_io.h"

namespace vizentropy {
namespace {

PairComparisonTable PairCounts() {
  std::ifstream in(VIZENTROPY_TEST_DATA "/pair_counts.json");
  std::stringstream s;
  s << in.rdbuf();
  return PairTableFromJson(ParseJson(s.str()));
}

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(BradleyTerryTest, ReferenceAbilitiesReproduced) {
  const PairComparisonTable table = PairCounts();
  ASSERT_EQ(table.rows.size(), 21u);
  const BtResult r = FitBradleyTerry(table, "A");
  EXPECT_EQ(r.reference, "A");
  ASSERT_EQ(r.coefficients.size(), 7u);
  EXPECT_EQ(r.coefficients[0].item, "A");
  EXPECT_EQ(r.coefficients[0].ability, 0.0);
  EXPECT_FALSE(r.coefficients[0].std_error.has_value());

  const char* ids[] = {"B", "C", "D", "E", "F", "G"};
  const double ability[] = {1.9054, 2.3128, 2.7892, 3.1662, 3.4986, 3.8355};
  const double se[] = {0.3008, 0.3045, 0.3090, 0.3132, 0.3179, 0.3241};
  for (int i = 0; i < 6; ++i) {
    const BtCoefficient& c = r.Coefficient(ids[i]);
    EXPECT_NEAR(c.ability, ability[i], 5e-5) << ids[i];
    ASSERT_TRUE(c.std_error.has_value());
    EXPECT_NEAR(*c.std_error, se[i], 5e-5) << ids[i];
    EXPECT_NEAR(*c.z_value, c.ability / *c.std_error, 1e-12);
  }
  EXPECT_NEAR(*r.Coefficient("B").p_value, 2.374e-10, 0.001e-10);
  EXPECT_NEAR(*r.Coefficient("C").p_value, 3.095e-14, 0.001e-14);
  for (const char* id : {"D", "E", "F", "G"}) {
    EXPECT_LT(*r.Coefficient(id).p_value, 2e-16) << id;
  }
  EXPECT_NEAR(r.null_deviance, 407.00234, 1e-4);
  EXPECT_NEAR(r.residual_deviance, 70.15645, 1e-4);
  EXPECT_EQ(r.null_df, 21);
  EXPECT_EQ(r.residual_df, 15);
  ASSERT_TRUE(r.pseudo_r2.has_value());
  EXPECT_NEAR(*r.pseudo_r2, 1.0 - r.residual_deviance / r.null_deviance, 1e-12);
  EXPECT_NEAR(1.0 - 70.156 / 407.002, 0.8276, 1e-4);
  EXPECT_LE(r.residual_deviance, r.null_deviance);
}

TEST(BradleyTerryTest, FormattedTable) {
  const std::string text = FormatBtTable(FitBradleyTerry(PairCounts(), "A"));
  EXPECT_NE(text.find("Ability  Std Error   z value  Pr(>|z|)"), std::string::npos);
  EXPECT_NE(text.find("1.9054     0.3008"), std::string::npos);
  EXPECT_NE(text.find("2.37E-10"), std::string::npos);
  EXPECT_NE(text.find("3.10E-14"), std::string::npos);
  EXPECT_NE(text.find("< 2e-16"), std::string::npos);
  EXPECT_NE(text.find("Null deviance: 407.002 on 21 df"), std::string::npos);
  EXPECT_NE(text.find("Residual deviance: 70.156 on 15 df"), std::string::npos);
}

TEST(BradleyTerryTest, FormatPValue) {
  EXPECT_EQ(FormatPValue(1e-20), "< 2e-16");
  EXPECT_EQ(FormatPValue(0.0), "< 2e-16");
  EXPECT_EQ(FormatPValue(2.374e-10), "2.37E-10");
  EXPECT_EQ(FormatPValue(0.5), "5.00E-01");
}

TEST(BradleyTerryTest, FormatPairTableFollowsColumnOrder) {
  const std::string text = FormatPairTable(PairCounts());
  EXPECT_EQ(text.rfind("Left glyph  Right glyph  Chose left  Chose right  mean RT", 0),
            0u);
  EXPECT_NE(text.find("B           D                     5           33"),
            std::string::npos);
}

TEST(BradleyTerryTest, BalancedPairIsEven) {
  const PairComparisonTable t{{PairRow{"A", "B", 19, 19, std::nullopt}}};
  const BtResult r = FitBradleyTerry(t, "A");
  EXPECT_NEAR(r.Ability("B"), 0.0, 1e-12);
  EXPECT_NEAR(r.WinProbability("A", "B"), 0.5, 1e-12);
  EXPECT_NEAR(r.null_deviance, 0.0, 1e-12);
  EXPECT_FALSE(r.pseudo_r2.has_value());
}

TEST(BradleyTerryTest, MatchesGridSearchOracle) {
  oracle::Gen gen(1234);
  for (int trial = 0; trial < 5; ++trial) {
    std::int64_t wins[3][3] = {};
    PairComparisonTable t;
    const char* names[] = {"p", "q", "r"};
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        wins[i][j] = gen.Int(1, 12);
        wins[j][i] = gen.Int(1, 12);
        t.rows.push_back(PairRow{names[i], names[j], wins[i][j], wins[j][i], {}});
      }
    }
    const BtResult fit = FitBradleyTerry(t, "p");
    const oracle::GridFit grid = oracle::BradleyTerryGrid3(wins);
    const double a[3] = {0.0, grid.a1, grid.a2};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const double want = 1.0 / (1.0 + std::exp(a[j] - a[i]));
        EXPECT_NEAR(fit.WinProbability(names[i], names[j]), want, 1e-3)
            << "trial " << trial;
      }
    }
    EXPECT_NEAR(fit.Ability("q"), grid.a1, 2e-3);
    EXPECT_NEAR(fit.Ability("r"), grid.a2, 2e-3);
  }
}

TEST(BradleyTerryTest, ReferenceChoiceLeavesProbabilitiesUnchanged) {
  const PairComparisonTable table = PairCounts();
  const BtResult by_a = FitBradleyTerry(table, "A");
  const BtResult by_d = FitBradleyTerry(table, "D");
  EXPECT_EQ(by_d.Ability("D"), 0.0);
  for (const std::string& i : table.Items()) {
    EXPECT_NEAR(by_d.Ability(i) - by_a.Ability(i), -by_a.Ability("D"), 1e-9);
    for (const std::string& j : table.Items()) {
      EXPECT_NEAR(by_a.WinProbability(i, j), by_d.WinProbability(i, j), 1e-9);
    }
  }
  EXPECT_NEAR(by_a.residual_deviance, by_d.residual_deviance, 1e-9);
}

TEST(BradleyTerryTest, LikelihoodIsMaximal) {
  const PairComparisonTable table = PairCounts();
  const BtResult r = FitBradleyTerry(table, "A");
  std::vector<double> best;
  for (const std::string& id : table.Items()) best.push_back(r.Ability(id));
  const double ll = BtLogLikelihood(table, best);
  oracle::Gen gen(4);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> probe = best;
    probe[gen.Int(0, 6)] += gen.Uniform(-0.05, 0.05);
    EXPECT_LE(BtLogLikelihood(table, probe), ll + 1e-12);
  }
}

TEST(BradleyTerryTest, RecoversSimulatedAbilities) {
  const std::vector<std::string> ids = {"a", "b", "c", "d", "e"};
  const std::vector<double> truth = {0.0, 0.4, -0.7, 1.1, 0.2};
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    std::mt19937_64 rng(seed);
    PairComparisonTable t;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        std::binomial_distribution<std::int64_t> draw(
            60, 1.0 / (1.0 + std::exp(truth[j] - truth[i])));
        const std::int64_t w = draw(rng);
        t.rows.push_back(PairRow{ids[i], ids[j], w, 60 - w, {}});
      }
    }
    const BtResult r = FitBradleyTerry(t, "a");
    bool all = true;
    for (std::size_t i = 1; i < ids.size(); ++i) {
      const BtCoefficient& c = r.Coefficient(ids[i]);
      if (std::fabs(c.ability - truth[i]) > 3.0 * *c.std_error) all = false;
    }
    good += all;
  }
  EXPECT_GE(good, 95);
}

TEST(BradleyTerryTest, Errors) {
  EXPECT_EQ(CodeOf([] {
              FitBradleyTerry({{PairRow{"A", "A", 1, 1, {}}}}, "A");
            }),
            ErrorCode::kSelfPair);
  EXPECT_EQ(CodeOf([] {
              FitBradleyTerry(
                  {{PairRow{"A", "B", 1, 1, {}}, PairRow{"B", "A", 1, 1, {}}}},
                  "A");
            }),
            ErrorCode::kDuplicatePair);
  EXPECT_EQ(CodeOf([] {
              FitBradleyTerry(
                  {{PairRow{"A", "B", 1, 1, {}}, PairRow{"C", "D", 1, 1, {}}}},
                  "A");
            }),
            ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([] {
              // A zero-count row is no edge.
              FitBradleyTerry(
                  {{PairRow{"A", "B", 1, 1, {}}, PairRow{"B", "C", 0, 0, {}}}},
                  "A");
            }),
            ErrorCode::kDisconnectedGraph);
  EXPECT_EQ(CodeOf([] { FitBradleyTerry({{PairRow{"A", "B", 1, 1, {}}}}, "Z"); }),
            ErrorCode::kInvalidArgument);
  // Complete separation: B never loses, so its ability has no finite MLE.
  try {
    FitBradleyTerry({{PairRow{"A", "B", 0, 10, {}}}}, "A");
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonConvergence);
    EXPECT_EQ(e.kind(), ErrorKind::kNumerical);
    EXPECT_NE(std::string(e.what()).find("gradient norm"), std::string::npos);
  }
  // C sweeps both others while A and B split; the fit used to stop early
  // with C at a huge finite ability.
  EXPECT_EQ(CodeOf([] {
              FitBradleyTerry({{PairRow{"A", "B", 5, 3, {}},
                                PairRow{"A", "C", 0, 8, {}},
                                PairRow{"B", "C", 0, 8, {}}}},
                              "A");
            }),
            ErrorCode::kNonConvergence);
  EXPECT_EQ(CodeOf([] {
              FitBradleyTerry({{PairRow{"A", "B", 5, 0, {}}}}, "B");
            }),
            ErrorCode::kNonConvergence);
}

TEST(MergeDuplicatesTest, BothOrdersCombine) {
  const std::vector<PairTrial> trials{{"A", "B", Choice::kLeft, 1.0},
                                      {"B", "A", Choice::kLeft, 2.0}};
  const PairComparisonTable t = MergeDuplicates(trials);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].left, "A");
  EXPECT_EQ(t.rows[0].right, "B");
  EXPECT_EQ(t.rows[0].chose_left, 1);
  EXPECT_EQ(t.rows[0].chose_right, 1);
  EXPECT_EQ(t.rows[0].mean_rt, 1.5);
}

TEST(MergeDuplicatesTest, NineteenParticipantsSevenGlyphs) {
  const std::vector<std::string> ids = {"A", "B", "C", "D", "E", "F", "G"};
  std::vector<PairTrial> trials;
  oracle::Gen gen(19);
  for (int p = 0; p < 19; ++p) {
    for (const auto& l : ids) {
      for (const auto& r : ids) {
        if (l == r) continue;
        trials.push_back({l, r, gen.Int(0, 1) ? Choice::kLeft : Choice::kRight,
                          gen.Uniform(0.5, 3)});
      }
    }
  }
  ASSERT_EQ(trials.size(), 19u * 42u);
  const PairComparisonTable t = MergeDuplicates(trials);
  ASSERT_EQ(t.rows.size(), 21u);
  for (const PairRow& row : t.rows) {
    EXPECT_EQ(row.chose_left + row.chose_right, 38);
    EXPECT_LT(row.left, row.right);
  }
}

TEST(MergeDuplicatesTest, EmptyAndSelfPair) {
  EXPECT_TRUE(MergeDuplicates(std::vector<PairTrial>{}).rows.empty());
  const std::vector<PairTrial> bad{{"A", "A", Choice::kLeft, 1.0}};
  EXPECT_EQ(CodeOf([&] { MergeDuplicates(bad); }), ErrorCode::kSelfPair);
}

}  // namespace
}  // namespace vizentropy
