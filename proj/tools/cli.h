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

#ifndef VIZENTROPY_TOOLS_CLI_H_
#define VIZENTROPY_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vizentropy/color.h"
#include "vizentropy/geometry.h"
#include "vizentropy/scale.h"

namespace vizentropy::cli {

// Sections of the --config file. Absent sections keep library defaults; the
// scale is built lazily because generating it runs the entropy estimator.
struct Config {
  std::optional<UncertaintyScale> scale;
  GlyphProportions proportions;
  ColorMap color_map = DefaultTemperatureColorMap();
  DisplayGeometry display;

  const UncertaintyScale& Scale();
};

// {scale, proportions, color_map, display_geometry}, all optional.
Config LoadConfig(const std::string& path);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& contents);

// Runs one command line (without the program name). Output goes to --out
// when given, else `out`; diagnostics go to `err`. Returns 0, 1 for a
// validation error or bad usage, 2 for a numerical failure.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace vizentropy::cli

#endif  // VIZENTROPY_TOOLS_CLI_H_
