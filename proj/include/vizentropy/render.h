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

#ifndef VIZENTROPY_RENDER_H_
#define VIZENTROPY_RENDER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vizentropy/color.h"
#include "vizentropy/geometry.h"
#include "vizentropy/ingest.h"
#include "vizentropy/scale.h"

namespace vizentropy {

// Glyph documents are SVG 1.1 made of solid-fill circles, paths and text
// inside groups. No gradients, filters, shadows or scripts are ever emitted,
// and output is a pure function of the input.
std::string RenderGlyph(const GlyphGeometry& glyph, int out_px = 256);

struct Placement {
  SensorSummary summary;
  Point position;  // canvas pixels, y down
  double diameter = 48.0;
};

struct SceneSpec {
  int width = 0;
  int height = 0;
  std::vector<Placement> placements;
  UncertaintyScale scale;
  ColorMap color_map;
  bool show_labels = true;
  std::optional<std::string> background;  // href drawn beneath all glyphs
  GlyphProportions proportions;
};

// One glyph group per placement: fill from ValueToColor(mean), wave level
// from scale.MapUncertainty(variance), the null glyph when variance is
// absent. Throws kPlacementOutOfCanvas for a centre outside the canvas and
// kBoundsUnset when the scale has no variance range.
std::string RenderScene(const SceneSpec& scene);

// Returns `scale` bounded by the smallest and largest variance present in
// `summaries`; a single distinct variance v gives [v, v + 1]. Throws
// kBoundsUnset when no summary has a variance.
UncertaintyScale AutoRangeBounds(const UncertaintyScale& scale,
                                 std::span<const SensorSummary> summaries);

// Label text for a mean value, one decimal place ("13.5").
std::string FormatValueLabel(double value);

}  // namespace vizentropy

#endif  // VIZENTROPY_RENDER_H_
