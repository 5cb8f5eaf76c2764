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

#ifndef VIZENTROPY_JSON_IO_H_
#define VIZENTROPY_JSON_IO_H_

#include <string_view>

#include "json.hpp"
#include "vizentropy/bradley_terry.h"
#include "vizentropy/color.h"
#include "vizentropy/geometry.h"
#include "vizentropy/hypothesis.h"
#include "vizentropy/ingest.h"
#include "vizentropy/regression.h"
#include "vizentropy/render.h"
#include "vizentropy/scale.h"
#include "vizentropy/sdt.h"
#include "vizentropy/trials.h"

// JSON wire formats. Every *FromJson throws Error(kSchemaMismatch) on a
// missing or mistyped field, so callers see one error type for bad files.
namespace vizentropy {

using Json = nlohmann::json;

// Parses text, throwing Error(kSchemaMismatch) on a syntax error.
Json ParseJson(std::string_view text);

// {levels: [{index, frequency, amplitude, entropy}], v_min, v_max, N,
//  generated_by_version}. Signals are regenerated on read; entropies are
// taken from the file.
Json ToJson(const UncertaintyScale& scale);
UncertaintyScale ScaleFromJson(const Json& j);

Json ToJson(const GlyphProportions& p);
GlyphProportions ProportionsFromJson(const Json& j);  // missing keys default

Json ToJson(const ColorMap& m);
ColorMap ColorMapFromJson(const Json& j);

Json ToJson(const DisplayGeometry& d);
DisplayGeometry DisplayFromJson(const Json& j);  // missing keys default

Json ToJson(const SensorSummary& s);
SensorSummary SummaryFromJson(const Json& j);

// {canvas: {width, height}, placements: [{summary, position: {x, y},
//  diameter}], scale, color_map, show_labels, background, proportions}.
// color_map, proportions and background may be omitted; a missing scale
// means the five-level display scale without bounds.
Json ToJson(const SceneSpec& scene);
SceneSpec SceneFromJson(const Json& j);

// {rows: [{left, right, chose_left, chose_right, mean_rt}]}
Json ToJson(const PairComparisonTable& t);
PairComparisonTable PairTableFromJson(const Json& j);

Json ToJson(const BtResult& r);
Json ToJson(const RegressionResult& r);

Json ToJson(const SdtCounts& c);
SdtCounts SdtCountsFromJson(const Json& j);
Json ToJson(const SdtResult& r);

Json ToJson(const TTestResult& r);

Json ToJson(const TrialManifest& m);
TrialManifest ManifestFromJson(const Json& j);

Json ToJson(const TrialResults& r);
TrialResults ResultsFromJson(const Json& j);

}  // namespace vizentropy

#endif  // VIZENTROPY_JSON_IO_H_
