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

#ifndef VIZENTROPY_COLOR_H_
#define VIZENTROPY_COLOR_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vizentropy {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  // "#rrggbb", lower case.
  std::string Hex() const;
  // Accepts "#rrggbb" or "rrggbb" in either case.
  static Rgb FromHex(std::string_view hex);

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kDarkRingColor{0x1a, 0x1a, 0x1a};
inline constexpr Rgb kLightRingColor{0xff, 0xff, 0xff};

struct ColorStop {
  double threshold = 0.0;  // lower edge of the band, measure units
  Rgb color;

  friend bool operator==(const ColorStop&, const ColorStop&) = default;
};

// Discrete banded scale. Band i covers [stops[i].threshold,
// stops[i+1].threshold); values outside the covered range clamp to the end
// bands.
struct ColorMap {
  std::string name;
  std::vector<ColorStop> stops;

  // Throws kInvalidColorMap unless there are >= 2 stops with strictly
  // increasing finite thresholds.
  void Validate() const;

  friend bool operator==(const ColorMap&, const ColorMap&) = default;
};

Rgb ValueToColor(double value, const ColorMap& map);

// Banded temperature scale in degrees Celsius modelled on the public UK
// forecast palette. The colours are an approximation, not an official
// palette.
ColorMap DefaultTemperatureColorMap();

}  // namespace vizentropy

#endif  // VIZENTROPY_COLOR_H_
