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


// Acceptance run: one PASS/FAIL line per criterion, with indented detail
// lines beneath. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.h"
#include "vizentropy/bradley_terry.h"
#include "vizentropy/entropy.h"
#include "vizentropy/error.h"
#include "vizentropy/geometry.h"
#include "vizentropy/hypothesis.h"
#include "vizentropy/json_io.h"
#include "vizentropy/regression.h"
#include "vizentropy/render.h"
#include "vizentropy/scale.h"
#include "vizentropy/sdt.h"
#include "vizentropy/trials.h"
#include "cli.h"

namespace vizentropy {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects sub-checks for one criterion.
class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  bool Check(bool ok, const std::string& what) {
    lines_.push_back(std::string(ok ? "    ok    " : "    FAIL  ") + what);
    ok_ = ok_ && ok;
    return ok;
  }
  void Note(const std::string& text) { lines_.push_back("          " + text); }

  bool Print(int number) const {
    std::printf("%s criterion %d: %s\n", ok_ ? "PASS" : "FAIL", number,
                title_.c_str());
    for (const std::string& l : lines_) std::printf("%s\n", l.c_str());
    return ok_;
  }

 private:
  std::string title_;
  std::vector<std::string> lines_;
  bool ok_ = true;
};

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

PairComparisonTable PairCounts() {
  return PairTableFromJson(ParseJson(
      cli::ReadTextFile(std::string(VIZENTROPY_TEST_DATA) + "/pair_counts.json")));
}

const char* const kGlyphIds[] = {"A", "B", "C", "D", "E", "F", "G"};

Criterion AbilitiesCriterion() {
  Criterion c("ability table reproduction");
  const double want_ability[] = {1.9054, 2.3128, 2.7892, 3.1662, 3.4986, 3.8355};
  const double want_se[] = {0.3008, 0.3045, 0.3090, 0.3132, 0.3179, 0.3241};
  const auto start = Clock::now();
  const BtResult r = FitBradleyTerry(PairCounts(), "A");
  const double elapsed = Seconds(start);
  for (int i = 0; i < 6; ++i) {
    const BtCoefficient& coef = r.Coefficient(kGlyphIds[i + 1]);
    c.Check(std::fabs(coef.ability - want_ability[i]) <= 0.005,
            Fmt("%s ability %.5f (expected %.4f +/- 0.005)", kGlyphIds[i + 1],
                coef.ability, want_ability[i]));
    c.Check(coef.std_error && std::fabs(*coef.std_error - want_se[i]) <= 0.005,
            Fmt("%s std error %.5f (expected %.4f +/- 0.005)", kGlyphIds[i + 1],
                coef.std_error.value_or(NAN), want_se[i]));
  }
  const double pb = *r.Coefficient("B").p_value;
  const double pc = *r.Coefficient("C").p_value;
  c.Check(pb >= 2.35e-10 && pb < 2.45e-10,
          Fmt("B p-value %.3g (expected about 2.4e-10)", pb));
  c.Check(pc >= 3.05e-14 && pc < 3.15e-14,
          Fmt("C p-value %.3g (expected about 3.1e-14)", pc));
  for (const char* id : {"D", "E", "F", "G"}) {
    const std::string p = FormatPValue(*r.Coefficient(id).p_value);
    c.Check(p == "< 2e-16", std::string(id) + " p-value " + p);
  }
  c.Check(elapsed < 1.0, Fmt("fit took %.4f s (limit 1 s)", elapsed));
  return c;
}

Criterion DevianceCriterion() {
  Criterion c("deviance reproduction");
  const BtResult r = FitBradleyTerry(PairCounts(), "A");
  c.Check(std::fabs(r.null_deviance - 407.002) <= 0.5,
          Fmt("null deviance %.4f on %d df (expected 407.002 +/- 0.5)",
              r.null_deviance, r.null_df));
  c.Check(std::fabs(r.residual_deviance - 70.156) <= 0.5,
          Fmt("residual deviance %.4f on %d df (expected 70.156 +/- 0.5)",
              r.residual_deviance, r.residual_df));
  const double r2 = r.pseudo_r2.value_or(NAN);
  c.Check(std::fabs(100.0 * r2 - 82.7) <= 0.3,
          Fmt("pseudo R^2 %.3f%% (expected 82.7 +/- 0.3)", 100.0 * r2));
  c.Check(std::fabs(r2 - (1.0 - 70.156 / 407.002)) <= 1e-3,
          Fmt("pseudo R^2 vs 1 - 70.156/407.002 = %.5f, diff %.2e",
              1.0 - 70.156 / 407.002, std::fabs(r2 - (1.0 - 70.156 / 407.002))));
  return c;
}

Criterion RegressionCriterion() {
  Criterion c("ability vs sample entropy regression");
  const BtResult bt = FitBradleyTerry(PairCounts(), "A");
  const UncertaintyScale scale = BuildDefaultScale();
  std::vector<double> entropy, ability;
  for (int i = 0; i < 7; ++i) {
    entropy.push_back(scale.levels()[i].entropy);
    ability.push_back(bt.Ability(kGlyphIds[i]));
  }
  c.Note(Fmt("default scale: %d levels, N = %d", scale.level_count(),
             scale.sample_count()));

  std::vector<double> log_entropy;
  for (int i = 1; i < 7; ++i) log_entropy.push_back(std::log(entropy[i]));
  const std::vector<double> upper(ability.begin() + 1, ability.end());
  const RegressionResult lin = FitOls(log_entropy, upper, 1);
  const bool lin_ok = lin.r_squared > 0.95 && lin.f_p_value < 0.01;
  c.Check(lin_ok,
          Fmt("levels 1-6, ability ~ log(SampEn): R^2 %.4f, p %.3g "
              "(need R^2 > 0.95, p < 0.01)",
              lin.r_squared, lin.f_p_value));

  const RegressionResult quad = FitOls(entropy, ability, 2);
  const bool quad_ok = quad.r_squared > 0.9;
  c.Check(quad_ok,
          Fmt("levels 0-6, ability ~ SampEn + SampEn^2: R^2 %.4f, p %.3g "
              "(need R^2 > 0.9)",
              quad.r_squared, quad.f_p_value));

  if (!lin_ok || !quad_ok) {
    c.Note("scatter (level, frequency, SampEn, log SampEn, ability, "
           "quadratic fit):");
    for (int i = 0; i < 7; ++i) {
      c.Note(Fmt("  %d  %5.1f  %.6f  %10s  %.5f  %.5f", i,
                 scale.levels()[i].frequency, entropy[i],
                 i == 0 ? "-" : Fmt("%.6f", log_entropy[i - 1]).c_str(),
                 ability[i], quad.fitted[i]));
    }
  }
  return c;
}

Criterion EntropyCriterion() {
  Criterion c("sample entropy properties");
  const auto start = Clock::now();
  oracle::Gen gen(20260417);

  double worst = 0.0;
  int scored = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> x = gen.Series(
        static_cast<std::size_t>(gen.Int(200, 400)), -1.0, 1.0);
    const double k = gen.Uniform(0.01, 100.0);
    std::vector<double> scaled = x;
    for (double& v : scaled) v *= k;
    try {
      worst = std::max(worst,
                       std::fabs(SampleEntropy(x) - SampleEntropy(scaled)));
      ++scored;
    } catch (const Error& e) {
      c.Note(std::string("signal skipped: ") + e.what());
    }
  }
  c.Check(scored == 20 && worst <= 1e-9,
          Fmt("amplitude scaling on %d/20 random signals, worst diff %.2e",
              scored, worst));

  const double ladder[] = {1.5, 3, 6, 12, 24, 48};
  for (int n : {360, kDefaultSampleCount}) {
    std::vector<double> h;
    std::string row;
    for (double f : ladder) {
      h.push_back(SampleEntropy(GenerateMessage(f, 1.0, n)));
      row += Fmt(" %.4f", h.back());
    }
    bool increasing = true;
    for (std::size_t i = 1; i < h.size(); ++i) increasing &= h[i] > h[i - 1];
    if (n == 360) {
      c.Check(increasing, "strictly increasing over 1.5..48 cycles at N=360:" +
                              row);
    } else {
      c.Note(Fmt("for reference, N=%d:", n) + row +
             (increasing ? " (increasing)" : " (not increasing)"));
    }
  }

  int agree = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.Int(5, 60));
    const std::vector<double> x =
        i % 2 ? gen.LatticeSeries(n, gen.Int(2, 6)) : gen.Series(n, -2, 2);
    const int m = gen.Int(1, 3);
    const double r = 0.2 * oracle::PopulationSd(x);
    const TemplateCounts got = CountTemplateMatches(x, m, r);
    const oracle::Counts want = oracle::SampEnCounts(x, m, r);
    agree += got.a == want.a && got.b == want.b;
  }
  c.Check(agree == 50,
          Fmt("template counts equal brute force on %d/50 short series", agree));

  const double elapsed = Seconds(start);
  c.Check(elapsed < 10.0, Fmt("runtime %.3f s (limit 10 s)", elapsed));
  return c;
}

Criterion SdtCriterion() {
  Criterion c("detection theory indices");
  const SdtCorrection modes[] = {SdtCorrection::kNone, SdtCorrection::kHalfCount,
                                 SdtCorrection::kLogLinear,
                                 SdtCorrection::kPsycho};
  oracle::Gen gen(1212);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    SdtCounts k{gen.Int(1, 150), gen.Int(1, 150), gen.Int(1, 150),
                gen.Int(1, 150)};
    if (t % 3 == 1) k.false_alarms = 0;
    if (t % 3 == 2) k.misses = 0;
    const double h_raw = static_cast<double>(k.hits) / k.present();
    const double f_raw = static_cast<double>(k.false_alarms) / k.absent();
    for (SdtCorrection mode : modes) {
      if (mode == SdtCorrection::kNone && (t % 3 != 0)) continue;
      double h, f;
      oracle::CorrectedRates(k, mode, h, f);
      const oracle::SdtIndices want = oracle::SdtFromRates(h, f, h_raw, f_raw);
      const SdtResult got = SdtMetrics(k, mode);
      worst = std::max({worst, std::fabs(got.d_prime - want.d_prime),
                        std::fabs(got.beta - want.beta) / std::max(1.0, want.beta),
                        std::fabs(got.a_prime - want.a_prime),
                        std::fabs(got.b_double_prime_d - want.b_double_prime_d)});
    }
  }
  c.Check(worst <= 1e-9,
          Fmt("20 random tables vs independent oracle, worst diff %.2e", worst));

  double anti = 0.0, complement = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::int64_t n = gen.Int(10, 150);
    const std::int64_t hits = gen.Int(1, n - 1);
    std::int64_t fas = gen.Int(1, n - 1);
    if (fas == hits) fas = hits == 1 ? 2 : hits - 1;
    const SdtCounts k{hits, n - hits, fas, n - fas};
    const SdtCounts swapped{fas, n - fas, hits, n - hits};
    const SdtResult a = SdtMetrics(k, SdtCorrection::kNone);
    const SdtResult b = SdtMetrics(swapped, SdtCorrection::kNone);
    anti = std::max(anti, std::fabs(a.d_prime + b.d_prime));
    complement = std::max(complement, std::fabs(a.a_prime + b.a_prime - 1.0));
  }
  c.Check(anti <= 1e-12,
          Fmt("d' antisymmetric under swapping H and F, worst %.2e", anti));
  c.Check(complement <= 1e-12,
          Fmt("a'(H,F) + a'(F,H) = 1, worst %.2e", complement));

  // Which 150/150 count tables give the reference high-entropy indices?
  int matching_modes = 0;
  for (SdtCorrection mode : modes) {
    std::string found;
    int count = 0;
    for (std::int64_t hits = 0; hits <= 150; ++hits) {
      for (std::int64_t fas = 0; fas <= 150; ++fas) {
        SdtResult r;
        try {
          r = SdtMetrics({hits, 150 - hits, fas, 150 - fas}, mode);
        } catch (const Error&) {
          continue;
        }
        if (std::fabs(r.d_prime - 4.2761) <= 0.01 &&
            std::fabs(r.beta - 11.8558) <= 0.01 &&
            std::fabs(r.a_prime - 0.9867) <= 0.01 &&
            std::fabs(r.b_double_prime_d - 1.0) <= 0.01) {
          ++count;
          if (found.size() < 80) {
            found += Fmt(" {%lld,%lld,%lld,%lld}", static_cast<long long>(hits),
                         static_cast<long long>(150 - hits),
                         static_cast<long long>(fas),
                         static_cast<long long>(150 - fas));
          }
        }
      }
    }
    matching_modes += count > 0;
    c.Note(std::string(SdtCorrectionName(mode)) + ": " +
           std::to_string(count) + " matching table(s)" + found);
  }
  const SdtResult fixture = SdtMetrics({142, 8, 0, 150}, SdtCorrection::kPsycho);
  c.Check(matching_modes >= 1 && std::fabs(fixture.d_prime - 4.2761) <= 0.01 &&
              std::fabs(fixture.beta - 11.8558) <= 0.01 &&
              std::fabs(fixture.a_prime - 0.9867) <= 0.01 &&
              fixture.b_double_prime_d == 1.0,
          Fmt("fixture {142,8,0,150} under psycho: d' %.4f beta %.4f a' %.4f "
              "b''d %.4f",
              fixture.d_prime, fixture.beta, fixture.a_prime,
              fixture.b_double_prime_d));
  return c;
}

Criterion DisplayCriterion() {
  Criterion c("display acuity limit");
  const DisplayGeometry d;  // 0.094 mm pitch, 500 mm, 10 cpd
  const double px = WaveDiameterForCycles(24.0, d);
  // Hand trigonometry, independent of the library's helpers.
  const double kPi = 3.14159265358979323846;
  const double degrees = 24.0 / (10.0 * kPi);
  const double mm = 2.0 * 500.0 * std::tan(0.5 * degrees * kPi / 180.0);
  const double oracle_px = mm / 0.094;
  c.Check(std::fabs(px - 71.0) <= 2.0,
          Fmt("24 cycles -> %.3f px wave diameter (expected 71 +/- 2)", px));
  c.Check(std::fabs(px - oracle_px) <= 1e-9,
          Fmt("hand trigonometry gives %.6f px", oracle_px));
  DisplayGeometry back = d;
  back.glyph_wave_diameter_px = px;
  c.Check(std::fabs(MaxCycles(back) - 24.0) <= 1e-9,
          Fmt("max cycles at that diameter %.9f", MaxCycles(back)));
  return c;
}

Criterion DeterminismCriterion() {
  Criterion c("determinism and counting");
  const UncertaintyScale scale = BuildDisplayScale();
  const ColorMap colors = DefaultTemperatureColorMap();
  bool glyphs_equal = true;
  for (const GlyphLevel& level : scale.levels()) {
    const GlyphGeometry g =
        AssembleGlyph(level, ValueToColor(12.5, colors), "12.5");
    glyphs_equal &= RenderGlyph(g) == RenderGlyph(g);
    glyphs_equal &= RenderGlyph(g) ==
                    RenderGlyph(AssembleGlyph(level, ValueToColor(12.5, colors),
                                              "12.5"));
  }
  const GlyphGeometry null_glyph = NullGlyph(Rgb{0x99, 0x99, 0x99});
  glyphs_equal &= RenderGlyph(null_glyph) == RenderGlyph(null_glyph);
  c.Check(glyphs_equal, "glyph SVG byte-identical across runs");

  SceneSpec scene{.width = 300, .height = 200, .placements = {},
                  .scale = scale.WithBounds(0.0, 4.0), .color_map = colors};
  oracle::Gen gen(7);
  for (int i = 0; i < 12; ++i) {
    SensorSummary s;
    s.sensor_id = "s" + std::to_string(i);
    s.mean = gen.Uniform(-5, 30);
    s.count = i % 4 == 0 ? 1 : 6;
    if (s.count > 1) s.variance = gen.Uniform(0, 5);
    scene.placements.push_back(
        {s, {gen.Uniform(20, 280), gen.Uniform(20, 180)}, 40});
  }
  c.Check(RenderScene(scene) == RenderScene(scene),
          "scene SVG byte-identical across runs");

  std::vector<std::string> assets;
  for (const char* id : kGlyphIds) assets.push_back(std::string(id) + ".svg");
  const TrialManifest ranking = BuildRankingManifest(assets, 1);
  c.Check(ranking.trials.size() == 42,
          Fmt("ranking manifest for 7 glyphs has %zu trials", ranking.trials.size()));

  SearchBuckets buckets;
  for (int i = 0; i < 10; ++i) {
    buckets.low_present.push_back(Fmt("lp%d.svg", i));
    buckets.low_absent.push_back(Fmt("la%d.svg", i));
    buckets.high_present.push_back(Fmt("hp%d.svg", i));
    buckets.high_absent.push_back(Fmt("ha%d.svg", i));
  }
  const TrialManifest search = BuildSearchManifest(buckets, 1);
  int tally[2][2] = {};
  for (const Trial& t : search.trials) {
    const auto& s = std::get<SearchTrial>(t);
    ++tally[s.target == SearchTarget::kHigh][s.target_present];
  }
  c.Check(search.trials.size() == 40 && tally[0][0] == 10 &&
              tally[0][1] == 10 && tally[1][0] == 10 && tally[1][1] == 10,
          Fmt("search manifest has %zu trials, buckets %d/%d/%d/%d",
              search.trials.size(), tally[0][1], tally[0][0], tally[1][1],
              tally[1][0]));

  std::vector<TrialResults> files;
  for (int p = 0; p < 19; ++p) {
    TrialResults r;
    r.participant_id = Fmt("p%02d", p);
    r.manifest = BuildRankingManifest(assets, 100 + p, r.participant_id);
    for (int i = 0; i < 42; ++i) {
      r.records.push_back(TrialRecord{
          i, gen.Int(0, 1) ? Response::kLeft : Response::kRight,
          gen.Uniform(0.5, 3.0)});
    }
    files.push_back(std::move(r));
  }
  const auto table = std::get<PairComparisonTable>(MergeResults(files));
  bool sums = true;
  for (const PairRow& row : table.rows) {
    sums &= row.chose_left + row.chose_right == 38;
  }
  c.Check(table.rows.size() == 21 && sums,
          Fmt("19 x 42 merged into %zu rows, every row summing to 38: %s",
              table.rows.size(), sums ? "yes" : "no"));
  return c;
}

Criterion RtCriterion() {
  Criterion c("response time screening");
  std::vector<double> rts;
  for (const PairRow& row : PairCounts().rows) rts.push_back(row.mean_rt.value());
  const std::vector<bool> flags = RtOutliers(rts);
  const auto flagged = std::count(flags.begin(), flags.end(), true);
  c.Check(rts.size() == 21 && flagged == 0,
          Fmt("%zu mean RTs (mean %.4f s, sd %.4f s), %ld outside 3 SD",
              rts.size(), SampleMean(rts), std::sqrt(SampleVariance(rts)),
              static_cast<long>(flagged)));
  return c;
}

}  // namespace
}  // namespace vizentropy

int main() {
  using namespace vizentropy;
  const std::function<Criterion()> criteria[] = {
      AbilitiesCriterion, DevianceCriterion,  RegressionCriterion,
      EntropyCriterion,   SdtCriterion,       DisplayCriterion,
      DeterminismCriterion, RtCriterion};
  int failed = 0;
  for (int i = 0; i < 8; ++i) {
    Criterion c("");
    try {
      c = criteria[i]();
    } catch (const std::exception& e) {
      c = Criterion("aborted");
      c.Check(false, std::string("exception: ") + e.what());
    }
    failed += !c.Print(i + 1);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
