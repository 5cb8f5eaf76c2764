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

#include "vizentropy/json_io.h"

#include <cmath>
#include <string>
#include <utility>

#include "vizentropy/error.h"
#include "vizentropy/version.h"

namespace vizentropy {
namespace {

// Runs a decoder, translating library exceptions into schema errors.
template <typename F>
auto Decode(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaMismatch,
                std::string(what) + ": " + e.what());
  }
}

// Numbers that may be absent encode as null.
Json OptionalNumber(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

std::optional<double> ReadOptionalNumber(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

Timestamp ReadTimestamp(const Json& j, const char* key) {
  const std::string text = j.at(key).get<std::string>();
  const auto ts = ParseRfc3339(text);
  if (!ts) {
    throw Error(ErrorCode::kSchemaMismatch,
                std::string(key) + " '" + text + "' is not RFC 3339");
  }
  return *ts;
}

void CheckSchemaVersion(const Json& j) {
  const int version = j.at("schema_version").get<int>();
  if (version != kSchemaVersion) {
    throw Error(ErrorCode::kSchemaMismatch,
                "schema_version " + std::to_string(version) +
                    " is not supported (expected " +
                    std::to_string(kSchemaVersion) + ")");
  }
}

TrialMode ReadMode(const Json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "ranking") return TrialMode::kRanking;
  if (mode == "search") return TrialMode::kSearch;
  throw Error(ErrorCode::kSchemaMismatch, "unknown mode '" + mode + "'");
}

Response ReadResponse(const std::string& s) {
  if (s == "left") return Response::kLeft;
  if (s == "right") return Response::kRight;
  if (s == "yes") return Response::kYes;
  if (s == "no") return Response::kNo;
  throw Error(ErrorCode::kSchemaMismatch, "unknown response '" + s + "'");
}

}  // namespace

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchemaMismatch, e.what());
  }
}

Json ToJson(const UncertaintyScale& scale) {
  Json levels = Json::array();
  for (const GlyphLevel& level : scale.levels()) {
    levels.push_back({{"index", level.index},
                      {"frequency", level.frequency},
                      {"amplitude", level.amplitude},
                      {"entropy", level.entropy}});
  }
  Json j = {{"levels", std::move(levels)},
            {"v_min", nullptr},
            {"v_max", nullptr},
            {"N", scale.sample_count()},
            {"generated_by_version", std::string(kVersion)}};
  if (const auto& b = scale.bounds()) {
    j["v_min"] = b->v_min;
    j["v_max"] = b->v_max;
    if (b->binning == VarianceBinning::kLog) j["binning"] = "log";
  }
  return j;
}

UncertaintyScale ScaleFromJson(const Json& j) {
  return Decode("scale", [&] {
    const int n = j.at("N").get<int>();
    std::vector<GlyphLevel> levels;
    for (const Json& lj : j.at("levels")) {
      GlyphLevel level;
      level.index = lj.at("index").get<int>();
      level.frequency = lj.at("frequency").get<double>();
      level.amplitude = lj.at("amplitude").get<double>();
      level.entropy = lj.at("entropy").get<double>();
      level.signal = GenerateMessage(level.frequency, level.amplitude, n);
      levels.push_back(std::move(level));
    }
    UncertaintyScale scale(std::move(levels), n);
    const auto v_min = ReadOptionalNumber(j, "v_min");
    const auto v_max = ReadOptionalNumber(j, "v_max");
    if (v_min.has_value() != v_max.has_value()) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "v_min and v_max must both be set or both be null");
    }
    if (v_min) {
      const VarianceBinning binning =
          j.value("binning", std::string("uniform")) == "log"
              ? VarianceBinning::kLog
              : VarianceBinning::kUniform;
      scale = scale.WithBounds(*v_min, *v_max, binning);
    }
    return scale;
  });
}

Json ToJson(const GlyphProportions& p) {
  return {{"diameter", p.diameter},
          {"ring_band", p.ring_band},
          {"wave_mean_radius", p.wave_mean_radius},
          {"wave_amplitude", p.wave_amplitude},
          {"disc_radius", p.disc_radius}};
}

GlyphProportions ProportionsFromJson(const Json& j) {
  return Decode("proportions", [&] {
    GlyphProportions p;
    p.diameter = j.value("diameter", p.diameter);
    p.ring_band = j.value("ring_band", p.ring_band);
    p.wave_mean_radius = j.value("wave_mean_radius", p.wave_mean_radius);
    p.wave_amplitude = j.value("wave_amplitude", p.wave_amplitude);
    p.disc_radius = j.value("disc_radius", p.disc_radius);
    p.Validate();
    return p;
  });
}

Json ToJson(const ColorMap& m) {
  Json stops = Json::array();
  for (const ColorStop& s : m.stops) {
    stops.push_back({{"threshold", s.threshold}, {"color", s.color.Hex()}});
  }
  return {{"name", m.name}, {"stops", std::move(stops)}};
}

ColorMap ColorMapFromJson(const Json& j) {
  return Decode("color_map", [&] {
    ColorMap m;
    m.name = j.value("name", std::string());
    for (const Json& s : j.at("stops")) {
      m.stops.push_back(ColorStop{s.at("threshold").get<double>(),
                                  Rgb::FromHex(s.at("color").get<std::string>())});
    }
    m.Validate();
    return m;
  });
}

Json ToJson(const DisplayGeometry& d) {
  return {{"pixel_pitch_mm", d.pixel_pitch_mm},
          {"viewing_distance_mm", d.viewing_distance_mm},
          {"glyph_wave_diameter_px", d.glyph_wave_diameter_px},
          {"acuity_limit_cpd", d.acuity_limit_cpd}};
}

DisplayGeometry DisplayFromJson(const Json& j) {
  return Decode("display", [&] {
    DisplayGeometry d;
    d.pixel_pitch_mm = j.value("pixel_pitch_mm", d.pixel_pitch_mm);
    d.viewing_distance_mm =
        j.value("viewing_distance_mm", d.viewing_distance_mm);
    d.glyph_wave_diameter_px =
        j.value("glyph_wave_diameter_px", d.glyph_wave_diameter_px);
    d.acuity_limit_cpd = j.value("acuity_limit_cpd", d.acuity_limit_cpd);
    d.Validate();
    return d;
  });
}

Json ToJson(const SensorSummary& s) {
  Json j = {{"sensor_id", s.sensor_id},
            {"measure", s.measure},
            {"window_start", FormatRfc3339(s.window_start)},
            {"window_end", FormatRfc3339(s.window_end)},
            {"mean", s.mean},
            {"variance", OptionalNumber(s.variance)},
            {"count", s.count},
            {"location", nullptr}};
  if (s.location) j["location"] = {{"x", s.location->x}, {"y", s.location->y}};
  return j;
}

SensorSummary SummaryFromJson(const Json& j) {
  return Decode("summary", [&] {
    SensorSummary s;
    s.sensor_id = j.at("sensor_id").get<std::string>();
    s.measure = j.value("measure", std::string());
    if (j.contains("window_start")) s.window_start = ReadTimestamp(j, "window_start");
    if (j.contains("window_end")) s.window_end = ReadTimestamp(j, "window_end");
    s.mean = j.at("mean").get<double>();
    s.variance = ReadOptionalNumber(j, "variance");
    s.count = j.at("count").get<int>();
    if (s.count < 1 || (s.variance.has_value() != (s.count >= 2)) ||
        (s.variance && *s.variance < 0.0)) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "summary '" + s.sensor_id +
                      "': variance must be present (and >= 0) exactly when "
                      "count >= 2");
    }
    if (j.contains("location") && !j.at("location").is_null()) {
      s.location = Point{j.at("location").at("x").get<double>(),
                         j.at("location").at("y").get<double>()};
    }
    return s;
  });
}

Json ToJson(const SceneSpec& scene) {
  Json placements = Json::array();
  for (const Placement& p : scene.placements) {
    placements.push_back({{"summary", ToJson(p.summary)},
                          {"position", {{"x", p.position.x}, {"y", p.position.y}}},
                          {"diameter", p.diameter}});
  }
  return {{"canvas", {{"width", scene.width}, {"height", scene.height}}},
          {"placements", std::move(placements)},
          {"scale", ToJson(scene.scale)},
          {"color_map", ToJson(scene.color_map)},
          {"show_labels", scene.show_labels},
          {"background", scene.background ? Json(*scene.background) : Json()},
          {"proportions", ToJson(scene.proportions)}};
}

SceneSpec SceneFromJson(const Json& j) {
  return Decode("scene", [&] {
    SceneSpec scene{
        .width = j.at("canvas").at("width").get<int>(),
        .height = j.at("canvas").at("height").get<int>(),
        .placements = {},
        .scale = j.contains("scale") ? ScaleFromJson(j.at("scale"))
                                     : BuildDisplayScale(),
        .color_map = j.contains("color_map")
                         ? ColorMapFromJson(j.at("color_map"))
                         : DefaultTemperatureColorMap(),
        .show_labels = j.value("show_labels", true),
        .background = std::nullopt,
        .proportions = j.contains("proportions")
                           ? ProportionsFromJson(j.at("proportions"))
                           : GlyphProportions{},
    };
    if (j.contains("background") && !j.at("background").is_null()) {
      scene.background = j.at("background").get<std::string>();
    }
    for (const Json& pj : j.at("placements")) {
      scene.placements.push_back(
          Placement{SummaryFromJson(pj.at("summary")),
                    Point{pj.at("position").at("x").get<double>(),
                          pj.at("position").at("y").get<double>()},
                    pj.value("diameter", 48.0)});
    }
    return scene;
  });
}

Json ToJson(const PairComparisonTable& t) {
  Json rows = Json::array();
  for (const PairRow& r : t.rows) {
    rows.push_back({{"left", r.left},
                    {"right", r.right},
                    {"chose_left", r.chose_left},
                    {"chose_right", r.chose_right},
                    {"mean_rt", OptionalNumber(r.mean_rt)}});
  }
  return {{"rows", std::move(rows)}};
}

PairComparisonTable PairTableFromJson(const Json& j) {
  return Decode("pair table", [&] {
    PairComparisonTable t;
    for (const Json& r : j.at("rows")) {
      t.rows.push_back(PairRow{r.at("left").get<std::string>(),
                               r.at("right").get<std::string>(),
                               r.at("chose_left").get<std::int64_t>(),
                               r.at("chose_right").get<std::int64_t>(),
                               ReadOptionalNumber(r, "mean_rt")});
    }
    return t;
  });
}

Json ToJson(const BtResult& r) {
  Json coefs = Json::array();
  for (const BtCoefficient& c : r.coefficients) {
    coefs.push_back({{"item", c.item},
                     {"ability", c.ability},
                     {"std_error", OptionalNumber(c.std_error)},
                     {"z_value", OptionalNumber(c.z_value)},
                     {"p_value", OptionalNumber(c.p_value)}});
  }
  return {{"reference", r.reference},
          {"coefficients", std::move(coefs)},
          {"null_deviance", r.null_deviance},
          {"null_df", r.null_df},
          {"residual_deviance", r.residual_deviance},
          {"residual_df", r.residual_df},
          {"pseudo_r2", OptionalNumber(r.pseudo_r2)},
          {"iterations", r.iterations}};
}

Json ToJson(const RegressionResult& r) {
  return {{"coefficients", r.coefficients},
          {"r_squared", r.r_squared},
          {"f_statistic", OptionalNumber(r.f_statistic)},
          {"df_model", r.df_model},
          {"df_residual", r.df_residual},
          {"f_p_value", r.f_p_value},
          {"residuals", r.residuals}};
}

Json ToJson(const SdtCounts& c) {
  return {{"hits", c.hits},
          {"misses", c.misses},
          {"false_alarms", c.false_alarms},
          {"correct_rejections", c.correct_rejections}};
}

SdtCounts SdtCountsFromJson(const Json& j) {
  return Decode("sdt counts", [&] {
    return SdtCounts{j.at("hits").get<std::int64_t>(),
                     j.at("misses").get<std::int64_t>(),
                     j.at("false_alarms").get<std::int64_t>(),
                     j.at("correct_rejections").get<std::int64_t>()};
  });
}

Json ToJson(const SdtResult& r) {
  return {{"hit_rate", r.hit_rate},
          {"false_alarm_rate", r.false_alarm_rate},
          {"adjusted_hit_rate", r.adjusted_hit_rate},
          {"adjusted_false_alarm_rate", r.adjusted_false_alarm_rate},
          {"d_prime", r.d_prime},
          {"beta", r.beta},
          {"a_prime", r.a_prime},
          {"b_double_prime_d", r.b_double_prime_d}};
}

Json ToJson(const TTestResult& r) {
  return {{"t", r.t},
          {"df", r.df},
          {"p", r.p},
          {"mean_difference", r.mean_difference}};
}

Json ToJson(const TrialManifest& m) {
  Json trials = Json::array();
  for (const Trial& t : m.trials) {
    if (const auto* r = std::get_if<RankingTrial>(&t)) {
      trials.push_back(
          {{"left_asset", r->left_asset}, {"right_asset", r->right_asset}});
    } else {
      const auto& s = std::get<SearchTrial>(t);
      trials.push_back({{"scene_asset", s.scene_asset},
                        {"target_present", s.target_present},
                        {"target", std::string(SearchTargetName(s.target))}});
    }
  }
  return {{"schema_version", m.schema_version},
          {"mode", std::string(TrialModeName(m.mode))},
          {"seed", m.seed},
          {"participant_id", m.participant_id},
          {"instructions", m.instructions},
          {"trials", std::move(trials)}};
}

TrialManifest ManifestFromJson(const Json& j) {
  return Decode("manifest", [&] {
    CheckSchemaVersion(j);
    TrialManifest m;
    m.mode = ReadMode(j);
    m.seed = j.at("seed").get<std::uint64_t>();
    m.participant_id = j.value("participant_id", std::string());
    m.instructions = j.at("instructions").get<std::string>();
    for (const Json& t : j.at("trials")) {
      if (m.mode == TrialMode::kRanking) {
        m.trials.push_back(RankingTrial{t.at("left_asset").get<std::string>(),
                                        t.at("right_asset").get<std::string>()});
      } else {
        const std::string target = t.at("target").get<std::string>();
        if (target != "low" && target != "high") {
          throw Error(ErrorCode::kSchemaMismatch,
                      "unknown target '" + target + "'");
        }
        m.trials.push_back(SearchTrial{
            t.at("scene_asset").get<std::string>(),
            t.at("target_present").get<bool>(),
            target == "low" ? SearchTarget::kLow : SearchTarget::kHigh});
      }
    }
    m.Validate();
    return m;
  });
}

Json ToJson(const TrialResults& r) {
  Json records = Json::array();
  for (const TrialRecord& rec : r.records) {
    records.push_back({{"trial_index", rec.trial_index},
                       {"response", std::string(ResponseName(rec.response))},
                       {"rt", rec.rt}});
  }
  return {{"schema_version", r.schema_version},
          {"participant_id", r.participant_id},
          {"mode", std::string(TrialModeName(r.mode))},
          {"started_at", FormatRfc3339(r.started_at)},
          {"completed_at", FormatRfc3339(r.completed_at)},
          {"manifest", ToJson(r.manifest)},
          {"records", std::move(records)}};
}

TrialResults ResultsFromJson(const Json& j) {
  return Decode("results", [&] {
    CheckSchemaVersion(j);
    TrialResults r;
    r.participant_id = j.at("participant_id").get<std::string>();
    r.mode = ReadMode(j);
    r.started_at = ReadTimestamp(j, "started_at");
    r.completed_at = ReadTimestamp(j, "completed_at");
    r.manifest = ManifestFromJson(j.at("manifest"));
    for (const Json& rec : j.at("records")) {
      r.records.push_back(
          TrialRecord{rec.at("trial_index").get<int>(),
                      ReadResponse(rec.at("response").get<std::string>()),
                      rec.at("rt").get<double>()});
    }
    r.Validate();
    return r;
  });
}

}  // namespace vizentropy
