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

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cli.h"
#include "serve_trial.h"
#include "vizentropy/bradley_terry.h"
#include "vizentropy/entropy.h"
#include "vizentropy/error.h"
#include "vizentropy/geometry.h"
#include "vizentropy/hypothesis.h"
#include "vizentropy/ingest.h"
#include "vizentropy/json_io.h"
#include "vizentropy/regression.h"
#include "vizentropy/render.h"
#include "vizentropy/scale.h"
#include "vizentropy/sdt.h"
#include "vizentropy/trials.h"
#include "vizentropy/version.h"

namespace vizentropy::cli {
namespace {

// Neutral value-disc colour when a glyph is generated without a value.
constexpr Rgb kNeutralGray{0x99, 0x99, 0x99};

struct Context {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::string out_path;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  Config config;
};

struct Command {
  CLI::App* app;
  std::function<void()> run;
};

void Emit(Context& ctx, const std::string& text) {
  if (ctx.out_path.empty()) {
    *ctx.out << text;
  } else {
    WriteTextFile(ctx.out_path, text);
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ReadJsonFile(const std::string& path) {
  return ParseJson(ReadTextFile(path));
}

std::uint64_t RequireSeed(const Context& ctx) {
  if (!ctx.seed) {
    throw Error(ErrorCode::kInvalidArgument, "--seed is required");
  }
  return *ctx.seed;
}

// A JSON array, or numbers separated by whitespace or commas.
std::vector<double> ReadNumbers(const std::string& path) {
  const std::string text = ReadTextFile(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return ParseJson(text).get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchemaMismatch, path + ": " + e.what());
    }
  }
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    pos = text.find_first_not_of(" \t\r\n,", pos);
    if (pos == std::string::npos) break;
    const std::size_t end = text.find_first_of(" \t\r\n,", pos);
    const std::string token = text.substr(pos, end - pos);
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw MalformedRowError(values.size() + 1,
                              "'" + token + "' is not a number");
    }
    values.push_back(v);
    pos = end;
  }
  return values;
}

void AddEntropy(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::optional<double> frequency;
    double amplitude = 1.0;
    int samples = kDefaultSampleCount;
    std::string input;
    SampEnParams params;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "entropy", "Sample entropy of a generated message or a series file");
  auto* freq = sub->add_option("--frequency", o->frequency,
                               "Message frequency, cycles per revolution");
  sub->add_option("--amplitude", o->amplitude, "Message amplitude");
  sub->add_option("-N,--samples", o->samples, "Samples per revolution");
  auto* input = sub->add_option("--input", o->input,
                                "Series file: JSON array or plain numbers")
                    ->check(CLI::ExistingFile);
  freq->excludes(input);
  sub->add_option("--m", o->params.m, "Embedding length");
  sub->add_option("--r", o->params.r_frac, "Tolerance as a fraction of SD");
  cmds.push_back({sub, [o, &ctx] {
    Json j;
    std::vector<double> series;
    if (!o->input.empty()) {
      series = ReadNumbers(o->input);
    } else {
      if (!o->frequency) {
        throw Error(ErrorCode::kInvalidArgument,
                    "give --frequency or --input");
      }
      const Signal s = GenerateMessage(*o->frequency, o->amplitude, o->samples);
      series.assign(s.samples().begin(), s.samples().end());
      j["frequency"] = *o->frequency;
      j["amplitude"] = o->amplitude;
    }
    j["n"] = series.size();
    j["m"] = o->params.m;
    j["r_frac"] = o->params.r_frac;
    j["sample_entropy"] = SampleEntropy(series, o->params);
    Emit(ctx, Dump(j));
  }});
}

void AddGenGlyph(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    int level = 0;
    bool null_glyph = false;
    std::optional<double> value;
    std::optional<std::string> label;
    bool no_label = false;
    int size = 256;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("gen-glyph", "Render one glyph of the scale as SVG");
  auto* level = sub->add_option("--level", o->level, "Scale level index");
  auto* null_flag =
      sub->add_flag("--null", o->null_glyph, "Draw the missing-data glyph");
  level->excludes(null_flag);
  sub->add_option("--value", o->value,
                  "Measured value; sets the disc colour and the label");
  auto* label = sub->add_option("--label", o->label, "Label text override");
  sub->add_flag("--no-label", o->no_label, "Omit the label")->excludes(label);
  sub->add_option("--size", o->size, "Output size in pixels")
      ->check(CLI::PositiveNumber);
  cmds.push_back({sub, [o, &ctx] {
    Config& cfg = ctx.config;
    const Rgb color =
        o->value ? ValueToColor(*o->value, cfg.color_map) : kNeutralGray;
    std::optional<std::string> text = o->label;
    if (!text && o->value && !o->no_label) text = FormatValueLabel(*o->value);
    GlyphGeometry g;
    if (o->null_glyph) {
      g = AssembleGlyph(kNullCase, color, text, cfg.proportions);
    } else {
      const UncertaintyScale& scale = cfg.Scale();
      if (o->level < 0 || o->level >= scale.level_count()) {
        throw Error(ErrorCode::kOutOfRange,
                    "level " + std::to_string(o->level) + " is not in [0, " +
                        std::to_string(scale.level_count() - 1) + "]");
      }
      const GlyphLevel& lv = scale.levels()[o->level];
      const double limit = MaxCycles(cfg.display);
      if (lv.frequency > limit) {
        *ctx.err << "warning: " << lv.frequency
                 << " cycles exceeds the display limit of " << limit
                 << " at the configured viewing geometry\n";
      }
      g = AssembleGlyph(lv, color, text, cfg.proportions);
    }
    Emit(ctx, RenderGlyph(g, o->size));
  }});
}

void AddGenScale(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    int levels = 7;
    double base_frequency = 1.5;
    double amplitude = 1.0;
    int samples = kDefaultSampleCount;
    std::optional<double> v_min;
    std::optional<double> v_max;
    bool log_binning = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "gen-scale", "Build a frequency-doubling scale and write it as JSON");
  sub->add_option("--levels", o->levels, "Number of levels, including 0");
  sub->add_option("--base-frequency", o->base_frequency,
                  "Frequency of level 1");
  sub->add_option("--amplitude", o->amplitude, "Message amplitude");
  sub->add_option("-N,--samples", o->samples, "Samples per revolution");
  auto* vmin = sub->add_option("--v-min", o->v_min, "Lowest variance bound");
  auto* vmax = sub->add_option("--v-max", o->v_max, "Highest variance bound");
  vmin->needs(vmax);
  vmax->needs(vmin);
  sub->add_flag("--log-binning", o->log_binning,
                "Bin variance on a log axis");
  cmds.push_back({sub, [o, &ctx] {
    UncertaintyScale scale =
        BuildScale(o->levels, o->base_frequency, o->amplitude, o->samples);
    if (o->v_min) {
      scale = scale.WithBounds(
          *o->v_min, *o->v_max,
          o->log_binning ? VarianceBinning::kLog : VarianceBinning::kUniform);
    }
    Emit(ctx, Dump(ToJson(scale)));
  }});
}

void AddRenderScene(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  auto path = std::make_shared<std::string>();
  CLI::App* sub =
      app.add_subcommand("render-scene", "Render a scene spec as SVG");
  sub->add_option("scene", *path, "Scene spec JSON")
      ->required()
      ->check(CLI::ExistingFile);
  cmds.push_back({sub, [path, &ctx] {
    Json j = ReadJsonFile(*path);
    // Sections the scene leaves out come from the config.
    if (!j.contains("scale") && ctx.config.scale) {
      j["scale"] = ToJson(*ctx.config.scale);
    }
    if (!j.contains("color_map")) j["color_map"] = ToJson(ctx.config.color_map);
    if (!j.contains("proportions")) {
      j["proportions"] = ToJson(ctx.config.proportions);
    }
    SceneSpec scene = SceneFromJson(j);
    if (!scene.scale.bounds()) {
      std::vector<SensorSummary> summaries;
      for (const Placement& p : scene.placements) {
        summaries.push_back(p.summary);
      }
      scene.scale = AutoRangeBounds(scene.scale, summaries);
    }
    Emit(ctx, RenderScene(scene));
  }});
}

void AddSummarize(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::string input;
    std::string format;
    std::string window_start;
    int window_minutes = 60;
    std::string locations;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "summarize", "Aggregate sensor readings over one window");
  sub->add_option("input", o->input, "Readings file (CSV or JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--format", o->format,
                  "csv or json; defaults to the file extension");
  sub->add_option("--window-start", o->window_start,
                  "RFC 3339 start; aligned down to the hour")
      ->required();
  sub->add_option("--window-minutes", o->window_minutes, "Window length")
      ->check(CLI::PositiveNumber);
  sub->add_option("--locations", o->locations,
                  "JSON object mapping sensor_id to {x, y}")
      ->check(CLI::ExistingFile);
  cmds.push_back({sub, [o, &ctx] {
    std::string format = o->format;
    if (format.empty()) {
      format = std::filesystem::path(o->input).extension().string();
      if (!format.empty()) format.erase(0, 1);
    }
    const auto start = ParseRfc3339(o->window_start);
    if (!start) {
      throw Error(ErrorCode::kInvalidArgument,
                  "--window-start '" + o->window_start + "' is not RFC 3339");
    }
    std::map<std::string, Point> locations;
    if (!o->locations.empty()) {
      const Json j = ReadJsonFile(o->locations);
      try {
        for (const auto& [id, p] : j.items()) {
          locations[id] = Point{p.at("x").get<double>(), p.at("y").get<double>()};
        }
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kSchemaMismatch, o->locations + ": " + e.what());
      }
    }
    const auto readings =
        ParseReadings(ReadTextFile(o->input), ParseReadingFormat(format));
    const auto summaries =
        SummarizeWindow(readings, AlignToHour(*start),
                        std::chrono::minutes(o->window_minutes), locations);
    Json out = Json::array();
    for (const SensorSummary& s : summaries) out.push_back(ToJson(s));
    Emit(ctx, Dump(out));
  }});
}

void AddManifestRanking(CLI::App& app, Context& ctx,
                        std::vector<Command>& cmds) {
  struct Opts {
    std::vector<std::string> assets;
    std::string participant;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "manifest-ranking", "Pairwise ranking manifest over glyph assets");
  sub->add_option("assets", o->assets, "Glyph asset paths")->required();
  sub->add_option("--participant", o->participant, "Participant id");
  cmds.push_back({sub, [o, &ctx] {
    Emit(ctx, Dump(ToJson(BuildRankingManifest(o->assets, RequireSeed(ctx),
                                               o->participant))));
  }});
}

void AddManifestSearch(CLI::App& app, Context& ctx,
                       std::vector<Command>& cmds) {
  struct Opts {
    std::string buckets;
    std::string participant;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "manifest-search", "Target search manifest over four scene buckets");
  sub->add_option("buckets", o->buckets,
                  "JSON {low_present, low_absent, high_present, high_absent}")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--participant", o->participant, "Participant id");
  cmds.push_back({sub, [o, &ctx] {
    const Json j = ReadJsonFile(o->buckets);
    SearchBuckets b;
    try {
      b.low_present = j.at("low_present").get<std::vector<std::string>>();
      b.low_absent = j.at("low_absent").get<std::vector<std::string>>();
      b.high_present = j.at("high_present").get<std::vector<std::string>>();
      b.high_absent = j.at("high_absent").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchemaMismatch, o->buckets + ": " + e.what());
    }
    Emit(ctx, Dump(ToJson(
                  BuildSearchManifest(b, RequireSeed(ctx), o->participant))));
  }});
}

void AddMerge(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::vector<std::string> files;
    std::string format = "json";
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("merge", "Merge participant result files");
  sub->add_option("files", o->files, "TrialResults JSON files")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--format", o->format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmds.push_back({sub, [o, &ctx] {
    std::vector<TrialResults> results;
    for (const std::string& f : o->files) {
      results.push_back(ResultsFromJson(ReadJsonFile(f)));
    }
    const MergedResults merged = MergeResults(results);
    const bool text = o->format == "text";
    if (const auto* table = std::get_if<PairComparisonTable>(&merged)) {
      std::vector<double> rts;
      std::vector<std::size_t> row_of;  // rts[k] belongs to rows[row_of[k]]
      for (std::size_t i = 0; i < table->rows.size(); ++i) {
        if (const auto& rt = table->rows[i].mean_rt) {
          rts.push_back(*rt);
          row_of.push_back(i);
        }
      }
      const std::vector<bool> flags =
          rts.size() >= 2 ? RtOutliers(rts) : std::vector<bool>(rts.size());
      std::vector<std::size_t> outliers;  // row indices
      for (std::size_t k = 0; k < flags.size(); ++k) {
        if (flags[k]) outliers.push_back(row_of[k]);
      }
      if (text) {
        std::string s = FormatPairTable(*table);
        s += "RT outliers (> 3 SD): " + std::to_string(outliers.size()) + "\n";
        Emit(ctx, s);
      } else {
        Json j = ToJson(*table);
        j["rt_outliers"] = outliers;
        Emit(ctx, Dump(j));
      }
      return;
    }
    const auto& counts = std::get<std::map<std::string, SdtCounts>>(merged);
    if (text) {
      std::ostringstream s;
      s << "target  hits  misses  false_alarms  correct_rejections\n";
      for (const auto& [name, c] : counts) {
        s << name << "  " << c.hits << "  " << c.misses << "  "
          << c.false_alarms << "  " << c.correct_rejections << "\n";
      }
      Emit(ctx, s.str());
    } else {
      Json j = Json::object();
      for (const auto& [name, c] : counts) j[name] = ToJson(c);
      Emit(ctx, Dump(j));
    }
  }});
}

void AddBtFit(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::string table;
    std::string reference;
    std::string format = "text";
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "bt-fit", "Fit a Bradley-Terry model to a pair comparison table");
  sub->add_option("table", o->table, "Pair table JSON ({rows: [...]})")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--reference", o->reference,
                  "Item fixed at ability 0; defaults to the first id");
  sub->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"json", "text"}));
  cmds.push_back({sub, [o, &ctx] {
    const PairComparisonTable table = PairTableFromJson(ReadJsonFile(o->table));
    std::string reference = o->reference;
    if (reference.empty()) {
      const auto items = table.Items();
      if (items.empty()) {
        throw Error(ErrorCode::kEmptyCondition, "pair table has no rows");
      }
      reference = items.front();
    }
    const BtResult r = FitBradleyTerry(table, reference);
    Emit(ctx, o->format == "text" ? FormatBtTable(r) : Dump(ToJson(r)));
  }});
}

void AddRegress(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::vector<double> x;
    std::vector<double> y;
    std::string input;
    int degree = 1;
    bool log_x = false;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub =
      app.add_subcommand("regress", "Ordinary least squares with an F test");
  auto* x = sub->add_option("--x", o->x, "Predictor values, comma separated")
                ->delimiter(',');
  auto* y = sub->add_option("--y", o->y, "Response values, comma separated")
                ->delimiter(',');
  auto* input = sub->add_option("--input", o->input, "JSON {x: [...], y: [...]}")
                    ->check(CLI::ExistingFile);
  input->excludes(x)->excludes(y);
  sub->add_option("--degree", o->degree, "Polynomial degree")
      ->check(CLI::Range(1, 2));
  sub->add_flag("--log-x", o->log_x, "Regress on the natural log of x");
  cmds.push_back({sub, [o, &ctx] {
    std::vector<double> xs = o->x;
    std::vector<double> ys = o->y;
    if (!o->input.empty()) {
      const Json j = ReadJsonFile(o->input);
      try {
        xs = j.at("x").get<std::vector<double>>();
        ys = j.at("y").get<std::vector<double>>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kSchemaMismatch, o->input + ": " + e.what());
      }
    }
    if (o->log_x) {
      for (double& v : xs) {
        if (!(v > 0.0)) {
          throw Error(ErrorCode::kInvalidArgument,
                      "--log-x needs positive x values");
        }
        v = std::log(v);
      }
    }
    Emit(ctx, Dump(ToJson(FitOls(xs, ys, o->degree))));
  }});
}

void AddSdt(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    SdtCounts counts;
    bool have_counts = false;
    std::string input;
    std::string correction = "half_count";
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "sdt", "Signal detection indices from a confusion matrix");
  auto* h = sub->add_option("--hits", o->counts.hits);
  auto* m = sub->add_option("--misses", o->counts.misses);
  auto* fa = sub->add_option("--false-alarms", o->counts.false_alarms);
  auto* cr = sub->add_option("--correct-rejections",
                             o->counts.correct_rejections);
  h->needs(m)->needs(fa)->needs(cr);
  auto* input = sub->add_option(
      "--input", o->input,
      "JSON counts, or an object of named counts as written by merge");
  input->check(CLI::ExistingFile)->excludes(h);
  sub->add_option("--correction", o->correction,
                  "none, half_count, loglinear or psycho");
  cmds.push_back({sub, [o, h, &ctx] {
    const SdtCorrection correction = ParseSdtCorrection(o->correction);
    auto report = [&](const SdtCounts& c) {
      Json j = ToJson(SdtMetrics(c, correction));
      j["counts"] = ToJson(c);
      j["correction"] = std::string(SdtCorrectionName(correction));
      return j;
    };
    if (h->count() > 0) {
      Emit(ctx, Dump(report(o->counts)));
      return;
    }
    if (o->input.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "give the four counts or --input");
    }
    const Json j = ReadJsonFile(o->input);
    if (j.contains("hits")) {
      Emit(ctx, Dump(report(SdtCountsFromJson(j))));
      return;
    }
    Json out = Json::object();
    for (const auto& [name, c] : j.items()) {
      out[name] = report(SdtCountsFromJson(c));
    }
    Emit(ctx, Dump(out));
  }});
}

std::string Stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

void AddTTest(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::vector<double> a;
    std::vector<double> b;
    std::string input;
    bool paired = false;
    bool welch = false;
    std::string format = "json";
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand("ttest", "Two-sided t test");
  auto* a = sub->add_option("--a", o->a, "First sample, comma separated")
                ->delimiter(',');
  auto* b = sub->add_option("--b", o->b, "Second sample, comma separated")
                ->delimiter(',');
  auto* input = sub->add_option("--input", o->input, "JSON {a: [...], b: [...]}")
                    ->check(CLI::ExistingFile);
  input->excludes(a)->excludes(b);
  auto* paired = sub->add_flag("--paired", o->paired, "Paired samples");
  sub->add_flag("--welch", o->welch, "Unequal variances")->excludes(paired);
  sub->add_option("--format", o->format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmds.push_back({sub, [o, &ctx] {
    std::vector<double> as = o->a;
    std::vector<double> bs = o->b;
    if (!o->input.empty()) {
      const Json j = ReadJsonFile(o->input);
      try {
        as = j.at("a").get<std::vector<double>>();
        bs = j.at("b").get<std::vector<double>>();
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kSchemaMismatch, o->input + ": " + e.what());
      }
    }
    const TTestKind kind = o->paired  ? TTestKind::kPaired
                           : o->welch ? TTestKind::kWelch
                                      : TTestKind::kPooled;
    const TTestResult r = TTest(as, bs, kind);
    if (o->format == "json") {
      Emit(ctx, Dump(ToJson(r)));
      return;
    }
    char line[160];
    std::snprintf(line, sizeof line, "%8s %8s %8s %8s %10s  %s\n", "Mean a",
                  "Mean b", "t", "df", "P-value", "Sig.");
    std::string s = line;
    std::snprintf(line, sizeof line, "%8.3f %8.3f %8.3f %8.2f %10.2E  %s\n",
                  SampleMean(as), SampleMean(bs), r.t, r.df, r.p,
                  Stars(r.p).c_str());
    s += line;
    Emit(ctx, s);
  }});
}

void AddServeTrial(CLI::App& app, Context& ctx, std::vector<Command>& cmds) {
  struct Opts {
    std::string static_dir;
    std::string manifest;
    std::string results_dir = "results";
    std::string host = "127.0.0.1";
    int port = 8080;
  };
  auto o = std::make_shared<Opts>();
  CLI::App* sub = app.add_subcommand(
      "serve-trial",
      "Serve the trial UI and store posted results (no authentication; "
      "local lab use only)");
  sub->add_option("--static", o->static_dir, "UI and asset directory")
      ->check(CLI::ExistingDirectory);
  sub->add_option("--manifest", o->manifest, "Manifest served at /manifest.json")
      ->check(CLI::ExistingFile);
  sub->add_option("--results-dir", o->results_dir,
                  "Where posted results are written");
  sub->add_option("--host", o->host, "Bind address");
  sub->add_option("--port", o->port, "Port; 0 picks a free one")
      ->check(CLI::Range(0, 65535));
  cmds.push_back({sub, [o, &ctx] {
    TrialServerOptions opts;
    opts.static_dir = o->static_dir;
    opts.results_dir = o->results_dir;
    if (!o->manifest.empty()) {
      opts.manifest = ManifestFromJson(ReadJsonFile(o->manifest));
    }
    opts.host = o->host;
    opts.port = o->port;
    TrialServer server(std::move(opts));
    const int port = server.Bind();
    *ctx.err << "serving http://" << o->host << ":" << port << "/\n";
    ctx.err->flush();
    server.Listen();
  }});
}

}  // namespace

const UncertaintyScale& Config::Scale() {
  if (!scale) scale = BuildDefaultScale();
  return *scale;
}

Config LoadConfig(const std::string& path) {
  Config config;
  if (path.empty()) return config;
  const Json j = ParseJson(ReadTextFile(path));
  if (!j.is_object()) {
    throw Error(ErrorCode::kSchemaMismatch, path + ": expected an object");
  }
  if (j.contains("scale")) config.scale = ScaleFromJson(j.at("scale"));
  if (j.contains("proportions")) {
    config.proportions = ProportionsFromJson(j.at("proportions"));
  }
  if (j.contains("color_map")) {
    config.color_map = ColorMapFromJson(j.at("color_map"));
  }
  if (j.contains("display_geometry")) {
    config.display = DisplayFromJson(j.at("display_geometry"));
  }
  return config;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteTextFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  out.close();
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Context ctx;
  ctx.out = &out;
  ctx.err = &err;

  CLI::App app("Glyph-based uncertainty visualization toolkit", "vizentropy");
  app.set_version_flag("--version", std::string(kVersion));
  app.add_option("--seed", ctx.seed, "Seed for shuffled trial orders");
  app.add_option("--config", ctx.config_path,
                 "JSON with scale, proportions, color_map, display_geometry")
      ->check(CLI::ExistingFile);
  app.add_option("--out", ctx.out_path, "Write output here instead of stdout");
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<Command> cmds;
  AddEntropy(app, ctx, cmds);
  AddGenGlyph(app, ctx, cmds);
  AddGenScale(app, ctx, cmds);
  AddRenderScene(app, ctx, cmds);
  AddSummarize(app, ctx, cmds);
  AddManifestRanking(app, ctx, cmds);
  AddManifestSearch(app, ctx, cmds);
  AddMerge(app, ctx, cmds);
  AddBtFit(app, ctx, cmds);
  AddRegress(app, ctx, cmds);
  AddSdt(app, ctx, cmds);
  AddTTest(app, ctx, cmds);
  AddServeTrial(app, ctx, cmds);
  for (Command& c : cmds) c.app->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    ctx.config = LoadConfig(ctx.config_path);
    for (Command& c : cmds) {
      if (c.app->parsed()) c.run();
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kNumerical ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace vizentropy::cli
