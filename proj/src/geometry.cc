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

#include "vizentropy/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "vizentropy/error.h"

namespace vizentropy {
namespace {

bool IsFraction(double f) { return std::isfinite(f) && f > 0.0 && f <= 0.5; }

// Rings and value disc shared by every glyph kind.
GlyphGeometry BaseGlyph(Rgb value_color, const GlyphProportions& prop) {
  prop.Validate();
  const double d = prop.diameter;
  GlyphGeometry g;
  g.diameter = d;
  g.dark_disc = Circle{{0.0, 0.0}, 0.5 * d};
  g.light_layer = Circle{{0.0, 0.0}, prop.wave_mean_radius * d};
  g.value_disc = Circle{{0.0, 0.0}, prop.disc_radius * d};
  g.value_color = value_color;
  g.label_anchor = Point{0.0, 0.0};
  g.label_size = 0.4 * prop.disc_radius * d;
  return g;
}

}  // namespace

PolarOutline EncodePolar(const Signal& signal, double base_radius) {
  const auto samples = signal.samples();
  if (samples.empty()) {
    throw Error(ErrorCode::kSeriesTooShort, "empty signal");
  }
  const double lowest = *std::min_element(samples.begin(), samples.end());
  if (!(base_radius + lowest > 0.0)) {
    throw Error(ErrorCode::kRadiusUnderflow,
                "radius " + std::to_string(base_radius) +
                    " with minimum sample " + std::to_string(lowest));
  }
  PolarOutline outline;
  outline.vertices.reserve(samples.size());
  const double step = 2.0 * std::numbers::pi / samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double radius = base_radius + samples[i];
    const double theta = step * i;
    outline.vertices.push_back({radius * std::cos(theta),
                                radius * std::sin(theta)});
  }
  outline.closed = true;
  return outline;
}

void GlyphProportions::Validate() const {
  if (!std::isfinite(diameter) || !(diameter > 0.0)) {
    throw Error(ErrorCode::kInvalidProportions, "diameter must be > 0");
  }
  if (!IsFraction(ring_band) || !IsFraction(wave_mean_radius) ||
      !IsFraction(wave_amplitude) || !IsFraction(disc_radius)) {
    throw Error(ErrorCode::kInvalidProportions,
                "fractions must lie in (0, 0.5]");
  }
  if (wave_mean_radius + wave_amplitude > 0.5) {
    throw Error(ErrorCode::kInvalidProportions,
                "wave crests would leave the dark ring");
  }
  if (wave_amplitude >= wave_mean_radius) {
    throw Error(ErrorCode::kInvalidProportions,
                "wave troughs would pass through the centre");
  }
}

GlyphGeometry AssembleGlyph(const GlyphLevel& level, Rgb value_color,
                            std::optional<std::string> label,
                            const GlyphProportions& proportions) {
  GlyphGeometry g = BaseGlyph(value_color, proportions);
  g.level = level.index;
  g.label = std::move(label);
  if (level.frequency == 0.0 || level.amplitude == 0.0) {
    g.kind = GlyphKind::kCircle;
    return g;
  }
  // Rescale the message so its peak maps to the glyph's wave amplitude.
  const double target = proportions.wave_amplitude * proportions.diameter;
  const double gain = target / level.amplitude;
  std::vector<double> scaled(level.signal.samples().begin(),
                             level.signal.samples().end());
  for (double& v : scaled) v *= gain;
  g.kind = GlyphKind::kWave;
  g.light_layer =
      EncodePolar(Signal(std::move(scaled)),
                  proportions.wave_mean_radius * proportions.diameter);
  return g;
}

GlyphGeometry AssembleGlyph(NullCase, Rgb value_color,
                            std::optional<std::string> label,
                            const GlyphProportions& proportions) {
  GlyphGeometry g = NullGlyph(value_color, proportions);
  g.label = std::move(label);
  return g;
}

GlyphGeometry NullGlyph(Rgb value_color, const GlyphProportions& proportions) {
  GlyphGeometry g = BaseGlyph(value_color, proportions);
  g.kind = GlyphKind::kNull;
  g.level = kNullLevel;
  const double r = proportions.disc_radius * proportions.diameter;
  // Mark in the upper part of the disc; any label sits beneath it.
  const double half_width = 0.08 * r;
  const double top = 0.75 * r;
  const double bottom = 0.15 * r;
  NullMarker marker;
  marker.bar.vertices = {{-half_width, top},
                         {-half_width, bottom},
                         {half_width, bottom},
                         {half_width, top}};
  marker.dot = Circle{{0.0, -0.05 * r}, 1.1 * half_width};
  marker.color = g.dark_color;
  g.null_marker = marker;
  g.label_anchor = Point{0.0, -0.5 * r};
  g.label_size = 0.3 * r;
  return g;
}

void DisplayGeometry::Validate() const {
  if (!(pixel_pitch_mm > 0.0) || !(viewing_distance_mm > 0.0) ||
      !(glyph_wave_diameter_px > 0.0) || !(acuity_limit_cpd > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "display geometry values must be positive");
  }
}

double VisualAngleDegrees(double size_mm, double distance_mm) {
  return 2.0 * std::atan(size_mm / (2.0 * distance_mm)) * 180.0 /
         std::numbers::pi;
}

double MaxCycles(const DisplayGeometry& display) {
  display.Validate();
  const double degrees = VisualAngleDegrees(
      display.glyph_wave_diameter_px * display.pixel_pitch_mm,
      display.viewing_distance_mm);
  return display.acuity_limit_cpd * std::numbers::pi * degrees;
}

double WaveDiameterForCycles(double cycles, const DisplayGeometry& display) {
  if (!(cycles > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "cycles must be > 0");
  }
  DisplayGeometry probe = display;
  probe.glyph_wave_diameter_px = 1.0;
  probe.Validate();
  const double degrees =
      cycles / (display.acuity_limit_cpd * std::numbers::pi);
  if (!(degrees < 180.0)) {
    throw Error(ErrorCode::kOutOfRange, "no finite diameter reaches " +
                                            std::to_string(cycles) + " cycles");
  }
  const double half_angle = 0.5 * degrees * std::numbers::pi / 180.0;
  return 2.0 * display.viewing_distance_mm * std::tan(half_angle) /
         display.pixel_pitch_mm;
}

}  // namespace vizentropy
