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

#include "vizentropy/ingest.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <utility>

#include "json.hpp"
#include "vizentropy/error.h"

namespace vizentropy {
namespace {

using std::chrono::days;
using std::chrono::hours;
using std::chrono::microseconds;
using std::chrono::minutes;
using std::chrono::seconds;

// Parses exactly `width` decimal digits at text[pos].
bool Digits(std::string_view text, std::size_t pos, std::size_t width,
            int* out) {
  if (pos + width > text.size()) return false;
  int v = 0;
  for (std::size_t i = pos; i < pos + width; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
    v = v * 10 + (text[i] - '0');
  }
  *out = v;
  return true;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<double> ParseFiniteDouble(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

SensorReading MakeReading(std::size_t row, std::string_view id,
                          std::string_view time, std::optional<double> value,
                          std::string_view measure) {
  if (id.empty()) throw MalformedRowError(row, "empty sensor_id");
  const auto ts = ParseRfc3339(time);
  if (!ts) {
    throw MalformedRowError(row,
                            "bad timestamp '" + std::string(time) + "'");
  }
  if (!value) throw MalformedRowError(row, "value is not a finite number");
  return SensorReading{std::string(id), *ts, *value, std::string(measure)};
}

std::vector<SensorReading> ParseCsv(std::string_view source) {
  std::vector<SensorReading> out;
  std::size_t row = 0;
  while (!source.empty()) {
    const std::size_t eol = source.find('\n');
    std::string_view line = source.substr(0, eol);
    source = eol == std::string_view::npos ? std::string_view()
                                           : source.substr(eol + 1);
    ++row;
    line = Trim(line);
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(Trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 4) {
      throw MalformedRowError(row, "expected 4 fields, got " +
                                       std::to_string(fields.size()));
    }
    if (out.empty() && fields[0] == "sensor_id" && fields[1] == "timestamp" &&
        fields[2] == "value" && fields[3] == "measure") {
      continue;
    }
    out.push_back(MakeReading(row, fields[0], fields[1],
                              ParseFiniteDouble(fields[2]), fields[3]));
  }
  return out;
}

std::vector<SensorReading> ParseJsonReadings(std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedRowError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw MalformedRowError(0, "expected a JSON array of readings");
  }
  std::vector<SensorReading> out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::size_t row = i + 1;
    const nlohmann::json& obj = doc[i];
    if (!obj.is_object()) throw MalformedRowError(row, "not an object");
    for (const char* key : {"sensor_id", "timestamp", "value", "measure"}) {
      if (!obj.contains(key)) {
        throw MalformedRowError(row, std::string("missing '") + key + "'");
      }
    }
    if (!obj["sensor_id"].is_string() || !obj["timestamp"].is_string() ||
        !obj["measure"].is_string()) {
      throw MalformedRowError(row, "sensor_id, timestamp and measure must be "
                                   "strings");
    }
    std::optional<double> value;
    if (obj["value"].is_number()) {
      const double v = obj["value"].get<double>();
      if (std::isfinite(v)) value = v;
    }
    out.push_back(MakeReading(row, obj["sensor_id"].get<std::string>(),
                              obj["timestamp"].get<std::string>(), value,
                              obj["measure"].get<std::string>()));
  }
  return out;
}

}  // namespace

std::optional<Timestamp> ParseRfc3339(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM)
  int year, month, day, hour, minute, second;
  if (!Digits(text, 0, 4, &year) || text.size() < 20 || text[4] != '-' ||
      !Digits(text, 5, 2, &month) || text[7] != '-' ||
      !Digits(text, 8, 2, &day) ||
      (text[10] != 'T' && text[10] != 't' && text[10] != ' ') ||
      !Digits(text, 11, 2, &hour) || text[13] != ':' ||
      !Digits(text, 14, 2, &minute) || text[16] != ':' ||
      !Digits(text, 17, 2, &second)) {
    return std::nullopt;
  }
  std::size_t pos = 19;
  long long micros = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t first = pos;
    long long scale = 100000;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      micros += (text[pos] - '0') * scale;
      scale /= 10;
      ++pos;
    }
    if (pos == first) return std::nullopt;
  }
  if (pos >= text.size()) return std::nullopt;
  int offset_minutes = 0;
  if (text[pos] == 'Z' || text[pos] == 'z') {
    ++pos;
  } else if (text[pos] == '+' || text[pos] == '-') {
    int oh, om;
    if (!Digits(text, pos + 1, 2, &oh) || pos + 3 >= text.size() ||
        text[pos + 3] != ':' || !Digits(text, pos + 4, 2, &om) || oh > 23 ||
        om > 59) {
      return std::nullopt;
    }
    offset_minutes = (text[pos] == '+' ? 1 : -1) * (oh * 60 + om);
    pos += 6;
  } else {
    return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;
  if (hour > 23 || minute > 59 || second > 59) return std::nullopt;
  const std::chrono::year_month_day ymd{
      std::chrono::year(year), std::chrono::month(month),
      std::chrono::day(day)};
  if (!ymd.ok()) return std::nullopt;
  const auto midnight = std::chrono::sys_days(ymd);
  return Timestamp(midnight) + hours(hour) + minutes(minute) +
         seconds(second) + microseconds(micros) - minutes(offset_minutes);
}

std::string FormatRfc3339(Timestamp t) {
  const auto day = std::chrono::floor<days>(t);
  const std::chrono::year_month_day ymd(day);
  const std::chrono::hh_mm_ss<microseconds> tod(t - day);
  char buf[48];
  int n = std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d",
                        static_cast<int>(ymd.year()),
                        static_cast<unsigned>(ymd.month()),
                        static_cast<unsigned>(ymd.day()),
                        static_cast<int>(tod.hours().count()),
                        static_cast<int>(tod.minutes().count()),
                        static_cast<int>(tod.seconds().count()));
  std::string out(buf, n);
  long long frac = tod.subseconds().count();
  if (frac != 0) {
    std::snprintf(buf, sizeof(buf), ".%06lld", frac);
    std::string f(buf);
    while (f.back() == '0') f.pop_back();
    out += f;
  }
  out += 'Z';
  return out;
}

Timestamp AlignToHour(Timestamp t) { return std::chrono::floor<hours>(t); }

ReadingFormat ParseReadingFormat(std::string_view name) {
  if (name == "csv") return ReadingFormat::kCsv;
  if (name == "json") return ReadingFormat::kJson;
  throw Error(ErrorCode::kUnknownFormat,
              "unknown reading format '" + std::string(name) + "'");
}

std::vector<SensorReading> ParseReadings(std::string_view source,
                                         ReadingFormat format) {
  switch (format) {
    case ReadingFormat::kCsv:
      return ParseCsv(source);
    case ReadingFormat::kJson:
      if (Trim(source).empty()) return {};
      return ParseJsonReadings(source);
  }
  throw Error(ErrorCode::kUnknownFormat, "unknown reading format");
}

std::vector<SensorSummary> SummarizeWindow(
    const std::vector<SensorReading>& readings, Timestamp aligned_to,
    std::chrono::microseconds window,
    const std::map<std::string, Point>& locations) {
  if (window <= microseconds::zero()) {
    throw Error(ErrorCode::kInvalidArgument, "window must be positive");
  }
  const Timestamp end = aligned_to + window;
  std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
  for (const SensorReading& r : readings) {
    if (r.timestamp < aligned_to || r.timestamp >= end) continue;
    groups[{r.sensor_id, r.measure}].push_back(r.value);
  }
  std::vector<SensorSummary> out;
  out.reserve(groups.size());
  for (auto& [key, values] : groups) {
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double sum = 0.0;
    for (double v : values) sum += v;
    SensorSummary s;
    s.sensor_id = key.first;
    s.measure = key.second;
    s.window_start = aligned_to;
    s.window_end = end;
    s.count = static_cast<int>(values.size());
    s.mean = sum / n;
    if (values.size() >= 2) {
      double ss = 0.0;
      for (double v : values) ss += (v - s.mean) * (v - s.mean);
      s.variance = ss / (n - 1.0);
    }
    if (auto it = locations.find(key.first); it != locations.end()) {
      s.location = it->second;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace vizentropy
