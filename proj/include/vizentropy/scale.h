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

#ifndef VIZENTROPY_SCALE_H_
#define VIZENTROPY_SCALE_H_

#include <optional>
#include <vector>

#include "vizentropy/entropy.h"

namespace vizentropy {

// Returned by the mapping functions when a value has no uncertainty
// information and must be drawn with the null-case glyph.
inline constexpr int kNullLevel = -1;

struct GlyphLevel {
  int index = 0;
  double frequency = 0.0;  // cycles per revolution; 0 is the plain circle
  double amplitude = 1.0;
  Signal signal;
  double entropy = 0.0;  // sample entropy of `signal`

  friend bool operator==(const GlyphLevel&, const GlyphLevel&) = default;
};

enum class VarianceBinning { kUniform, kLog };

struct VarianceBounds {
  double v_min = 0.0;
  double v_max = 1.0;
  VarianceBinning binning = VarianceBinning::kUniform;

  friend bool operator==(const VarianceBounds&, const VarianceBounds&) =
      default;
};

// An ordered set of glyph levels with strictly increasing entropy. Immutable;
// WithBounds returns a copy carrying a variance range.
class UncertaintyScale {
 public:
  // Validates the ladder: index == position, only level 0 has frequency 0,
  // each level past the first doubles the previous frequency, and entropies
  // strictly increase (kNonMonotoneEntropy otherwise).
  UncertaintyScale(std::vector<GlyphLevel> levels, int sample_count,
                   std::optional<VarianceBounds> bounds = std::nullopt);

  const std::vector<GlyphLevel>& levels() const { return levels_; }
  int level_count() const { return static_cast<int>(levels_.size()); }
  int sample_count() const { return sample_count_; }
  const std::optional<VarianceBounds>& bounds() const { return bounds_; }

  // Requires v_min < v_max (and v_min > 0 for log binning).
  UncertaintyScale WithBounds(
      double v_min, double v_max,
      VarianceBinning binning = VarianceBinning::kUniform) const;

  // Quantizes [v_min, v_max] into level_count() bins, half open except the
  // last. Out-of-range values clamp; a missing or NaN variance maps to
  // kNullLevel. Throws kBoundsUnset without bounds.
  int MapUncertainty(std::optional<double> variance) const;

  friend bool operator==(const UncertaintyScale&, const UncertaintyScale&) =
      default;

 private:
  std::vector<GlyphLevel> levels_;
  int sample_count_;
  std::optional<VarianceBounds> bounds_;
};

// Level 0 is the circle; level j >= 1 has frequency base_frequency*2^(j-1).
UncertaintyScale BuildScale(int level_count, double base_frequency,
                            double amplitude = 1.0,
                            int sample_count = kDefaultSampleCount);

// Seven levels from 1.5 cycles up to 48.
UncertaintyScale BuildDefaultScale();

// Five levels topping out at 24 cycles, the finest wave that stays under
// 10 cycles per degree on a 0.094 mm pitch display viewed from 500 mm.
UncertaintyScale BuildDisplayScale();

// Maps a p-value onto a 5-level scale using the R significance-code bands:
// p <= 0.001 -> 0, <= 0.01 -> 1, <= 0.05 -> 2, <= 0.1 -> 3, otherwise 4.
// Throws kOutOfRange outside [0, 1].
int SignificanceToLevel(double p_value);

}  // namespace vizentropy

#endif  // VIZENTROPY_SCALE_H_
