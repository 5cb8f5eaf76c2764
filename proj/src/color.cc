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

#include "vizentropy/color.h"

#include <cmath>
#include <cstdio>

#include "vizentropy/error.h"

namespace vizentropy {
namespace {

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string Rgb::Hex() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

Rgb Rgb::FromHex(std::string_view hex) {
  if (!hex.empty() && hex.front() == '#') hex.remove_prefix(1);
  if (hex.size() != 6) {
    throw Error(ErrorCode::kInvalidArgument,
                "colour '" + std::string(hex) + "' is not #rrggbb");
  }
  std::uint8_t channels[3];
  for (int i = 0; i < 3; ++i) {
    const int hi = HexDigit(hex[2 * i]);
    const int lo = HexDigit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "colour '" + std::string(hex) + "' is not #rrggbb");
    }
    channels[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Rgb{channels[0], channels[1], channels[2]};
}

void ColorMap::Validate() const {
  if (stops.size() < 2) {
    throw Error(ErrorCode::kInvalidColorMap,
                "colour map '" + name + "' needs at least 2 stops");
  }
  for (std::size_t i = 0; i < stops.size(); ++i) {
    if (!std::isfinite(stops[i].threshold)) {
      throw Error(ErrorCode::kInvalidColorMap, "non-finite threshold");
    }
    if (i > 0 && !(stops[i].threshold > stops[i - 1].threshold)) {
      throw Error(ErrorCode::kInvalidColorMap,
                  "thresholds must be strictly increasing");
    }
  }
}

Rgb ValueToColor(double value, const ColorMap& map) {
  // Largest band whose lower edge is <= value; first band below everything.
  std::size_t band = 0;
  for (std::size_t i = 1; i < map.stops.size(); ++i) {
    if (value >= map.stops[i].threshold) band = i;
  }
  return map.stops.at(band).color;
}

ColorMap DefaultTemperatureColorMap() {
  return ColorMap{
      "uk-temperature-approx",
      {
          {-100.0, Rgb::FromHex("#4a1486")},
          {-10.0, Rgb::FromHex("#2c5aa0")},
          {-5.0, Rgb::FromHex("#3f8fd2")},
          {0.0, Rgb::FromHex("#8cc8f0")},
          {5.0, Rgb::FromHex("#c6e8d4")},
          {10.0, Rgb::FromHex("#fef1a6")},
          {15.0, Rgb::FromHex("#fdc95c")},
          {20.0, Rgb::FromHex("#f99a3d")},
          {25.0, Rgb::FromHex("#e8552b")},
          {30.0, Rgb::FromHex("#b8191e")},
          {35.0, Rgb::FromHex("#7a0a12")},
      }};
}

}  // namespace vizentropy
