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

#ifndef VIZENTROPY_GEOMETRY_H_
#define VIZENTROPY_GEOMETRY_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vizentropy/color.h"
#include "vizentropy/entropy.h"
#include "vizentropy/scale.h"

namespace vizentropy {

// Model coordinates: origin at the glyph centre, y up, units of the glyph
// diameter's unit.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Closed outline, one vertex per message sample, counter-clockwise from
// angle 0.
struct PolarOutline {
  std::vector<Point> vertices;
  bool closed = true;

  friend bool operator==(const PolarOutline&, const PolarOutline&) = default;
};

// Throws kRadiusUnderflow if base_radius + min(samples) <= 0.
PolarOutline EncodePolar(const Signal& signal, double base_radius);

// Target-style glyph proportions. All radial quantities are fractions of the
// diameter. ring_band is the combined radial thickness of the dark and light
// rings on each side.
struct GlyphProportions {
  double diameter = 100.0;
  double ring_band = 0.20;
  double wave_mean_radius = 0.40;
  double wave_amplitude = 0.05;
  double disc_radius = 0.30;

  // Throws kInvalidProportions unless diameter > 0, every fraction lies in
  // (0, 0.5] and the wave stays inside the dark disc.
  void Validate() const;

  friend bool operator==(const GlyphProportions&, const GlyphProportions&) =
      default;
};

struct Circle {
  Point center;
  double radius = 0.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct Polygon {
  std::vector<Point> vertices;

  friend bool operator==(const Polygon&, const Polygon&) = default;
};

enum class GlyphKind { kCircle, kWave, kNull };

// Exclamation mark: a vertical bar above a dot.
struct NullMarker {
  Polygon bar;
  Circle dot;
  Rgb color;

  friend bool operator==(const NullMarker&, const NullMarker&) = default;
};

// Layers in paint order: dark disc, light layer, value disc, then the
// optional marker and label.
struct GlyphGeometry {
  GlyphKind kind = GlyphKind::kCircle;
  int level = kNullLevel;
  double diameter = 0.0;
  Circle dark_disc;
  Rgb dark_color = kDarkRingColor;
  std::variant<Circle, PolarOutline> light_layer;
  Rgb light_color = kLightRingColor;
  Circle value_disc;
  Rgb value_color;
  std::optional<std::string> label;
  Point label_anchor;
  double label_size = 0.0;
  std::optional<NullMarker> null_marker;

  friend bool operator==(const GlyphGeometry&, const GlyphGeometry&) = default;
};

struct NullCase {};
inline constexpr NullCase kNullCase{};

// Sinusoidal levels get a wavy light layer at wave_mean_radius*D with
// amplitude wave_amplitude*D; level 0 gets a plain circle.
GlyphGeometry AssembleGlyph(const GlyphLevel& level, Rgb value_color,
                            std::optional<std::string> label = std::nullopt,
                            const GlyphProportions& proportions = {});
GlyphGeometry AssembleGlyph(NullCase, Rgb value_color,
                            std::optional<std::string> label = std::nullopt,
                            const GlyphProportions& proportions = {});

// Glyph for a value whose uncertainty is unknown: the standard rings and
// value disc plus a dark exclamation mark. No layer is radius-modulated.
GlyphGeometry NullGlyph(Rgb value_color,
                        const GlyphProportions& proportions = {});

struct DisplayGeometry {
  double pixel_pitch_mm = 0.094;
  double viewing_distance_mm = 500.0;
  double glyph_wave_diameter_px = 71.0;
  double acuity_limit_cpd = 10.0;

  void Validate() const;
};

// Visual angle subtended by `size_mm` at `distance_mm`, in degrees.
double VisualAngleDegrees(double size_mm, double distance_mm);

// Most cycles the wave contour can carry before its spatial frequency passes
// the acuity limit. The contour is taken as the mean-radius circle, whose
// angular length is pi times its angular diameter.
double MaxCycles(const DisplayGeometry& display);

// Inverse of MaxCycles: the wave diameter in pixels at which `cycles` sits
// exactly at the acuity limit. Ignores display.glyph_wave_diameter_px.
double WaveDiameterForCycles(double cycles, const DisplayGeometry& display);

}  // namespace vizentropy

#endif  // VIZENTROPY_GEOMETRY_H_
