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

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vizentropy/error.h"
#include "vizentropy/normal.h"

namespace vizentropy {
namespace {

constexpr SdtCorrection kModes[] = {SdtCorrection::kNone,
                                    SdtCorrection::kHalfCount,
                                    SdtCorrection::kLogLinear,
                                    SdtCorrection::kPsycho};

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

SdtCounts RandomCounts(oracle::Gen& gen) {
  return SdtCounts{gen.Int(0, 150), gen.Int(0, 150), gen.Int(0, 150),
                   gen.Int(0, 150)};
}

bool Extreme(const SdtCounts& c) {
  return c.hits == 0 || c.misses == 0 || c.false_alarms == 0 ||
         c.correct_rejections == 0;
}

TEST(NormalQuantileTest, MatchesBisectionOracle) {
  oracle::Gen gen(2);
  for (int i = 0; i < 200; ++i) {
    const double p = gen.Uniform(1e-6, 1 - 1e-6);
    EXPECT_NEAR(NormalQuantile(p), oracle::NormalQuantile(p), 1e-9) << p;
  }
  EXPECT_NEAR(NormalQuantile(0.975), 1.959963984540054, 1e-12);
  EXPECT_EQ(NormalQuantile(0.5), 0.0);
}

TEST(SdtMetricsTest, MatchesOracleOnRandomTables) {
  oracle::Gen gen(314);
  int checked = 0;
  while (checked < 20) {
    SdtCounts c = RandomCounts(gen);
    if (c.present() == 0 || c.absent() == 0) continue;
    // Force some tables to the extremes so the corrections engage.
    if (checked % 4 == 1) c.false_alarms = 0;
    if (checked % 4 == 2) c.misses = 0;
    ++checked;
    const double h_raw = static_cast<double>(c.hits) / c.present();
    const double f_raw = static_cast<double>(c.false_alarms) / c.absent();
    for (SdtCorrection mode : kModes) {
      if (mode == SdtCorrection::kNone && Extreme(c)) continue;
      double h, f;
      oracle::CorrectedRates(c, mode, h, f);
      const oracle::SdtIndices want = oracle::SdtFromRates(h, f, h_raw, f_raw);
      const SdtResult got = SdtMetrics(c, mode);
      EXPECT_NEAR(got.d_prime, want.d_prime, 1e-9);
      EXPECT_NEAR(got.beta, want.beta, 1e-9 * std::max(1.0, want.beta));
      EXPECT_NEAR(got.a_prime, want.a_prime, 1e-9);
      EXPECT_NEAR(got.b_double_prime_d, want.b_double_prime_d, 1e-9);
      EXPECT_EQ(got.adjusted_hit_rate, h);
      EXPECT_EQ(got.adjusted_false_alarm_rate, f);
      EXPECT_GE(got.a_prime, 0.0);
      EXPECT_LE(got.a_prime, 1.0);
    }
  }
}

TEST(SdtMetricsTest, NoSensitivity) {
  const SdtResult r = SdtMetrics({75, 75, 75, 75}, SdtCorrection::kNone);
  EXPECT_EQ(r.d_prime, 0.0);
  EXPECT_EQ(r.beta, 1.0);
  EXPECT_EQ(r.a_prime, 0.5);
}

TEST(SdtMetricsTest, NoFalseAlarmsGivesUnitBias) {
  oracle::Gen gen(6);
  for (int i = 0; i < 20; ++i) {
    const std::int64_t hits = gen.Int(1, 149);
    for (SdtCorrection mode : {SdtCorrection::kHalfCount,
                               SdtCorrection::kLogLinear, SdtCorrection::kPsycho}) {
      EXPECT_EQ(SdtMetrics({hits, 150 - hits, 0, 150}, mode).b_double_prime_d, 1.0);
    }
  }
}

TEST(SdtMetricsTest, ReferenceHighGlyphIndices) {
  // 142 of 150 targets found, no false alarms, rates corrected as the R
  // psycho package does.
  const SdtResult r = SdtMetrics({142, 8, 0, 150}, SdtCorrection::kPsycho);
  EXPECT_NEAR(r.d_prime, 4.2761, 1e-4);
  EXPECT_NEAR(r.beta, 11.8558, 1e-4);
  EXPECT_NEAR(r.a_prime, 0.9867, 1e-4);
  EXPECT_EQ(r.b_double_prime_d, 1.0);
}

TEST(SdtMetricsTest, Antisymmetry) {
  oracle::Gen gen(77);
  for (int i = 0; i < 50; ++i) {
    const std::int64_t n = gen.Int(10, 150);
    const SdtCounts c{gen.Int(0, n), 0, gen.Int(0, n), 0};
    const SdtCounts full{c.hits, n - c.hits, c.false_alarms, n - c.false_alarms};
    const SdtCounts swapped{full.false_alarms, full.correct_rejections,
                            full.hits, full.misses};
    for (SdtCorrection mode : kModes) {
      if (mode == SdtCorrection::kNone && Extreme(full)) continue;
      const SdtResult a = SdtMetrics(full, mode);
      const SdtResult b = SdtMetrics(swapped, mode);
      EXPECT_NEAR(a.d_prime, -b.d_prime, 1e-12);
      if (full.hits != full.false_alarms) {
        EXPECT_NEAR(a.a_prime + b.a_prime, 1.0, 1e-12);
      }
    }
  }
}

TEST(SdtMetricsTest, Errors) {
  EXPECT_EQ(CodeOf([] { SdtMetrics({0, 0, 3, 4}); }), ErrorCode::kEmptyCondition);
  EXPECT_EQ(CodeOf([] { SdtMetrics({3, 4, 0, 0}); }), ErrorCode::kEmptyCondition);
  EXPECT_EQ(CodeOf([] { SdtMetrics({-1, 4, 3, 4}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { SdtMetrics({10, 0, 3, 4}, SdtCorrection::kNone); }),
            ErrorCode::kExtremeRates);
  EXPECT_EQ(CodeOf([] { ParseSdtCorrection("hautus"); }),
            ErrorCode::kInvalidArgument);
}

TEST(SdtCorrectionTest, NamesRoundTrip) {
  for (SdtCorrection mode : kModes) {
    EXPECT_EQ(ParseSdtCorrection(SdtCorrectionName(mode)), mode);
  }
}

TEST(SdtCorrectionTest, HalfCountOnlyWhenExtreme) {
  const SdtResult r = SdtMetrics({30, 10, 5, 35}, SdtCorrection::kHalfCount);
  EXPECT_EQ(r.adjusted_hit_rate, 0.75);
  EXPECT_EQ(r.adjusted_false_alarm_rate, 0.125);
  const SdtResult e = SdtMetrics({40, 0, 5, 35}, SdtCorrection::kHalfCount);
  EXPECT_EQ(e.adjusted_hit_rate, 40.5 / 41);
  EXPECT_EQ(e.adjusted_false_alarm_rate, 5.5 / 41);
}

}  // namespace
}  // namespace vizentropy
