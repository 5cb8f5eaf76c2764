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

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "vizentropy/error.h"
#include "vizentropy/json_io.h"

namespace vizentropy {
namespace {

const std::vector<double> kA{12.1, 11.8, 13.0, 12.6, 11.9, 12.4, 13.2, 12.0};
const std::vector<double> kB{11.6, 11.9, 12.2, 12.1, 11.5, 12.0, 12.5, 11.8};

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// Expected values were computed by hand (means, variances, the t formula)
// and the tail probabilities from a statistics table routine.
TEST(TTestTest, PairedHandValues) {
  const TTestResult r = TTest(kA, kB, TTestKind::kPaired);
  EXPECT_NEAR(r.t, 4.269101219838, 1e-6);
  EXPECT_EQ(r.df, 7.0);
  EXPECT_NEAR(r.p, 3.704777327586e-03, 1e-9);
  EXPECT_NEAR(r.mean_difference, 0.425, 1e-12);
}

TEST(TTestTest, PooledHandValues) {
  const TTestResult r = TTest(kA, kB, TTestKind::kPooled);
  EXPECT_NEAR(r.t, 1.959262534072, 1e-6);
  EXPECT_EQ(r.df, 14.0);
  EXPECT_NEAR(r.p, 7.030411540289e-02, 1e-9);
}

TEST(TTestTest, WelchHandValues) {
  const TTestResult r = TTest(kA, kB, TTestKind::kWelch);
  EXPECT_NEAR(r.t, 1.959262534072, 1e-6);
  EXPECT_NEAR(r.df, 11.743652783231, 1e-6);
  EXPECT_NEAR(r.p, 7.425104626896e-02, 1e-9);
}

TEST(TTestTest, SymmetryUnderSwap) {
  for (TTestKind kind : {TTestKind::kPaired, TTestKind::kPooled, TTestKind::kWelch}) {
    const TTestResult ab = TTest(kA, kB, kind);
    const TTestResult ba = TTest(kB, kA, kind);
    EXPECT_NEAR(ab.t, -ba.t, 1e-12);
    EXPECT_NEAR(ab.p, ba.p, 1e-12);
  }
}

TEST(TTestTest, IdenticalPairedListsGiveZero) {
  const TTestResult r = TTest(kA, kA, TTestKind::kPaired);
  EXPECT_EQ(r.t, 0.0);
  EXPECT_EQ(r.p, 1.0);
}

TEST(TTestTest, ConstantShiftIsInfiniteT) {
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{2, 3, 4};
  try {
    TTest(a, b, TTestKind::kPaired);
    FAIL() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfiniteT);
    EXPECT_EQ(e.kind(), ErrorKind::kNumerical);
  }
}

TEST(TTestTest, Errors) {
  EXPECT_EQ(CodeOf([] {
              TTest(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2},
                    TTestKind::kPaired);
            }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(CodeOf([] {
              TTest(std::vector<double>{1}, std::vector<double>{1, 2},
                    TTestKind::kWelch);
            }),
            ErrorCode::kTooFewSamples);
}

TEST(RtOutliersTest, ReferenceMeansHaveNoOutliers) {
  std::ifstream in(VIZENTROPY_TEST_DATA "/pair_counts.json");
  std::stringstream s;
  s << in.rdbuf();
  std::vector<double> rts;
  for (const PairRow& row : PairTableFromJson(ParseJson(s.str())).rows) {
    rts.push_back(*row.mean_rt);
  }
  ASSERT_EQ(rts.size(), 21u);
  EXPECT_NEAR(SampleMean(rts), 1.72143, 1e-5);
  EXPECT_NEAR(std::sqrt(SampleVariance(rts)), 0.45551, 1e-5);
  for (bool flag : RtOutliers(rts)) EXPECT_FALSE(flag);
}

TEST(RtOutliersTest, ConstantListHasNoOutliers) {
  for (bool flag : RtOutliers(std::vector<double>(12, 1.3))) EXPECT_FALSE(flag);
}

TEST(RtOutliersTest, SingleDeviantNeedsEnoughCompanions) {
  // With n values and one deviant, the largest attainable z is
  // (n - 1) / sqrt(n): 2.85 for n = 10, 4.25 for n = 20.
  std::vector<double> ten(9, 1.0);
  ten.push_back(100.0);
  const auto ten_flags = RtOutliers(ten);
  EXPECT_FALSE(ten_flags.back());

  std::vector<double> twenty(19, 1.0);
  twenty.push_back(100.0);
  const auto flags = RtOutliers(twenty);
  EXPECT_TRUE(flags.back());
  for (std::size_t i = 0; i + 1 < flags.size(); ++i) EXPECT_FALSE(flags[i]);
}

TEST(RtOutliersTest, TooFew) {
  EXPECT_EQ(CodeOf([] { RtOutliers(std::vector<double>{1.0}); }),
            ErrorCode::kTooFewSamples);
}

}  // namespace
}  // namespace vizentropy
