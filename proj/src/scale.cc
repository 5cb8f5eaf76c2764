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

#include "vizentropy/scale.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "vizentropy/error.h"

namespace vizentropy {

UncertaintyScale::UncertaintyScale(std::vector<GlyphLevel> levels,
                                   int sample_count,
                                   std::optional<VarianceBounds> bounds)
    : levels_(std::move(levels)), sample_count_(sample_count) {
  if (levels_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a scale needs at least 2 levels");
  }
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    const GlyphLevel& level = levels_[j];
    if (level.index != static_cast<int>(j)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "level at position " + std::to_string(j) + " has index " +
                      std::to_string(level.index));
    }
    if ((j == 0) != (level.frequency == 0.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "only level 0 may have frequency 0");
    }
    if (j >= 2 && level.frequency != 2.0 * levels_[j - 1].frequency) {
      throw Error(ErrorCode::kInvalidArgument,
                  "level " + std::to_string(j) +
                      " does not double the previous frequency");
    }
    if (j >= 1 && !(level.entropy > levels_[j - 1].entropy)) {
      throw Error(ErrorCode::kNonMonotoneEntropy,
                  "entropy of level " + std::to_string(j) + " (" +
                      std::to_string(level.entropy) + ") does not exceed level " +
                      std::to_string(j - 1) + " (" +
                      std::to_string(levels_[j - 1].entropy) + ")");
    }
  }
  if (bounds) *this = WithBounds(bounds->v_min, bounds->v_max, bounds->binning);
}

UncertaintyScale UncertaintyScale::WithBounds(double v_min, double v_max,
                                              VarianceBinning binning) const {
  if (!std::isfinite(v_min) || !std::isfinite(v_max) || !(v_min < v_max)) {
    throw Error(ErrorCode::kInvalidArgument,
                "variance bounds need v_min < v_max");
  }
  if (binning == VarianceBinning::kLog && !(v_min > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "log binning needs v_min > 0");
  }
  UncertaintyScale copy = *this;
  copy.bounds_ = VarianceBounds{v_min, v_max, binning};
  return copy;
}

int UncertaintyScale::MapUncertainty(std::optional<double> variance) const {
  if (!bounds_) {
    throw Error(ErrorCode::kBoundsUnset, "scale has no variance range");
  }
  if (!variance || std::isnan(*variance)) return kNullLevel;
  const int count = level_count();
  const double v = *variance;
  double t;
  if (bounds_->binning == VarianceBinning::kLog) {
    if (v <= bounds_->v_min) return 0;
    t = (std::log(v) - std::log(bounds_->v_min)) /
        (std::log(bounds_->v_max) - std::log(bounds_->v_min));
  } else {
    t = (v - bounds_->v_min) / (bounds_->v_max - bounds_->v_min);
  }
  if (!(t > 0.0)) return 0;
  if (t >= 1.0) return count - 1;
  return std::min(static_cast<int>(std::floor(t * count)), count - 1);
}

UncertaintyScale BuildScale(int level_count, double base_frequency,
                            double amplitude, int sample_count) {
  if (level_count < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 2 levels");
  }
  if (!(base_frequency > 0.0) || !std::isfinite(base_frequency)) {
    throw Error(ErrorCode::kInvalidArgument, "base frequency must be > 0");
  }
  const double top = std::ldexp(base_frequency, level_count - 2);
  if (top > sample_count / 2.0) {
    throw Error(ErrorCode::kFrequencyAboveNyquist,
                "top level needs " + std::to_string(top) + " cycles over " +
                    std::to_string(sample_count) + " samples");
  }
  std::vector<GlyphLevel> levels;
  levels.reserve(level_count);
  for (int j = 0; j < level_count; ++j) {
    GlyphLevel level;
    level.index = j;
    level.frequency = j == 0 ? 0.0 : std::ldexp(base_frequency, j - 1);
    level.amplitude = amplitude;
    level.signal = GenerateMessage(level.frequency, amplitude, sample_count);
    try {
      level.entropy = SampleEntropy(level.signal);
    } catch (const Error& e) {
      throw Error(e.code(), "level " + std::to_string(j) + ": " + e.what());
    }
    levels.push_back(std::move(level));
  }
  return UncertaintyScale(std::move(levels), sample_count);
}

UncertaintyScale BuildDefaultScale() { return BuildScale(7, 1.5); }

UncertaintyScale BuildDisplayScale() { return BuildScale(5, 3.0); }

int SignificanceToLevel(double p_value) {
  if (!(p_value >= 0.0 && p_value <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange,
                "p-value " + std::to_string(p_value) + " outside [0, 1]");
  }
  if (p_value <= 0.001) return 0;
  if (p_value <= 0.01) return 1;
  if (p_value <= 0.05) return 2;
  if (p_value <= 0.1) return 3;
  return 4;
}

}  // namespace vizentropy
