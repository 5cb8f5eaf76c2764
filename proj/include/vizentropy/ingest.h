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

#ifndef VIZENTROPY_INGEST_H_
#define VIZENTROPY_INGEST_H_

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vizentropy/geometry.h"

namespace vizentropy {

using Timestamp = std::chrono::sys_time<std::chrono::microseconds>;

// RFC 3339 date-time, e.g. "2019-07-01T10:05:00Z" or
// "2019-07-01T11:05:00.25+01:00". Returns nullopt on any syntax or range
// error.
std::optional<Timestamp> ParseRfc3339(std::string_view text);

// UTC with a "Z" suffix; fractional seconds only when non-zero.
std::string FormatRfc3339(Timestamp t);

// Floors to the start of the containing UTC hour.
Timestamp AlignToHour(Timestamp t);

struct SensorReading {
  std::string sensor_id;
  Timestamp timestamp;
  double value = 0.0;
  std::string measure;

  friend bool operator==(const SensorReading&, const SensorReading&) = default;
};

enum class ReadingFormat { kCsv, kJson };

// "csv" or "json"; anything else throws kUnknownFormat.
ReadingFormat ParseReadingFormat(std::string_view name);

// CSV: sensor_id,timestamp,value,measure with an optional header line of
// exactly those names; blank lines are skipped. JSON: an array of objects
// with the same fields. Bad rows throw MalformedRowError with a 1-based row
// number (the CSV line number, or the JSON array position).
std::vector<SensorReading> ParseReadings(std::string_view source,
                                         ReadingFormat format);

struct SensorSummary {
  std::string sensor_id;
  std::string measure;
  Timestamp window_start;
  Timestamp window_end;
  double mean = 0.0;
  std::optional<double> variance;  // absent when count < 2
  int count = 0;
  std::optional<Point> location;

  friend bool operator==(const SensorSummary&, const SensorSummary&) = default;
};

// Summarises readings in [aligned_to, aligned_to + window) per sensor and
// measure, sorted by sensor id then measure. Variance is the unbiased
// (n - 1) sample variance. Groups are summed in sorted value order, so the
// result does not depend on reading order.
std::vector<SensorSummary> SummarizeWindow(
    const std::vector<SensorReading>& readings, Timestamp aligned_to,
    std::chrono::microseconds window = std::chrono::hours(1),
    const std::map<std::string, Point>& locations = {});

}  // namespace vizentropy

#endif  // VIZENTROPY_INGEST_H_
